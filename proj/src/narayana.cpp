#include "knarayana/narayana.hpp"

#include <stdexcept>
#include <string>

#include "knarayana/matrix.hpp"

namespace knarayana {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1, got " + std::to_string(v));
}

void check_tuple(std::span<const int> a, int j) {
  if (a.empty()) throw std::invalid_argument("bracket tuple must be nonempty");
  for (int x : a)
    if (x < 1) throw std::invalid_argument("bracket entries must be positive, got " + std::to_string(x));
  if (j < 0) throw std::invalid_argument("bracket index must be nonnegative");
}

// det of the k x k integer matrix entry(i, l), 0-based.
template <typename Entry>
Integer binomial_determinant(std::size_t k, Entry entry) {
  std::vector<Integer> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) m[i * k + l] = entry(static_cast<long>(i), static_cast<long>(l));
  return bareiss_determinant(std::move(m), k);
}

}  // namespace

void NarayanaQuery::validate() const {
  require_positive(k, "k");
  require_positive(r, "r");
  if (j < 0) throw std::invalid_argument("j must be >= 0");
}

Integer narayana_classic(int r, int j) {
  require_positive(r, "r");
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  Integer num = binomial(r, j) * binomial(r, j + 1);
  if (num % r != 0) throw std::logic_error("Narayana number not integral");
  return num / r;
}

// Entry indices below are 0-based; the offsets l - i match the 1-based
// definitions since only differences of indices appear.

Integer round_bracket(std::span<const int> a, int j) {
  check_tuple(a, j);
  return binomial_determinant(a.size(), [&](long i, long l) { return binomial(a[l] - 1L, j + l - i); });
}

Integer square_bracket(std::span<const int> a, int j) {
  check_tuple(a, j);
  return binomial_determinant(a.size(), [&](long i, long l) { return binomial(a[l] + j - 1L, j + l - i); });
}

Integer curly_bracket(std::span<const int> a, int j, CurlyForm form) {
  check_tuple(a, j);
  const long k = static_cast<long>(a.size());
  if (form == CurlyForm::form1) {
    return binomial_determinant(a.size(), [&](long i, long l) {
      return binomial(a[k - 1 - l] + j + l - i - 1L, j + l - i);
    });
  }
  // 1-based a_i + j - i becomes a[i] + j - (i + 1).
  return binomial_determinant(a.size(), [&](long i, long l) { return binomial(a[i] + j - i - 1L, j + l - i); });
}

Integer multiset_narayana(int k, int r, int j) {
  require_positive(k, "k");
  require_positive(r, "r");
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  Rational v = 1;
  for (int i = 1; i <= k; ++i) v *= make_rational(multiset(j + i, r - 1), multiset(i, r - 1));
  return to_integer(v);
}

Integer simple_narayana_product(int k, int r, int j) {
  require_positive(k, "k");
  if (r < 0 || j < 0) throw std::invalid_argument("simple Narayana product needs r, j >= 0");
  Rational v = 1;
  for (int i = 0; i < k && v != 0; ++i) v *= make_rational(binomial(r + i, j), binomial(j + i, j));
  return to_integer(v);
}

Integer sulanke_narayana(int k, int r, int j) {
  require_positive(k, "k");
  require_positive(r, "r");
  if (j < 0 || j > (r - 1) * (k - 1)) return 0;
  const long top = static_cast<long>(k) * r + 1;
  Integer total = 0;
  for (int l = 0; l <= j; ++l) {
    Rational prod = 1;
    for (int i = 0; i < k; ++i) prod *= make_rational(binomial(r + i + l, r), binomial(r + i, r));
    Integer term = binomial(top, j - l) * to_integer(prod);
    if ((j - l) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

std::vector<Integer> narayana_row(int k, int r) {
  if (r == 0) return {1};
  require_positive(k, "k");
  require_positive(r, "r");
  const int deg = (r - 1) * (k - 1);
  std::vector<Integer> row;
  row.reserve(static_cast<std::size_t>(deg + 1));
  for (int j = 0; j <= deg; ++j) row.push_back(sulanke_narayana(k, r, j));
  return row;
}

Polynomial narayana_polynomial(int k, int r) {
  std::vector<Rational> c;
  for (const auto& v : narayana_row(k, r)) c.emplace_back(v);
  return Polynomial(std::move(c));
}

TruncatedSeries multiset_series(int k, int r, unsigned order) {
  require_positive(k, "k");
  require_positive(r, "r");
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (unsigned j = 0; j <= order; ++j) c.emplace_back(multiset_narayana(k, r, static_cast<int>(j)));
  return TruncatedSeries(std::move(c));
}

Polynomial simple_polynomial(int k, int r) {
  require_positive(k, "k");
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  std::vector<Rational> c;
  for (int j = 0; j <= r; ++j) c.emplace_back(simple_narayana_product(k, r, j));
  return Polynomial(std::move(c));
}

}  // namespace knarayana
