#include "knarayana/grassmann.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "knarayana/interpolate.hpp"
#include "knarayana/narayana.hpp"

namespace knarayana {

GrassmannianId::GrassmannianId(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || k > n)
    throw std::invalid_argument("Gr(k,n) needs 1 <= k <= n, got k=" + std::to_string(k_) + " n=" + std::to_string(n_));
}

TruncatedSeries hilbert_series_coeffs(const GrassmannianId& g, unsigned order, HilbertGrading grading) {
  const int r = g.n - g.k + 1;
  if (grading == HilbertGrading::plucker) return multiset_series(g.k, r, order);
  std::vector<Rational> c(order + 1, 0);
  for (unsigned l = 0; static_cast<unsigned long>(l) * g.k <= order; ++l)
    c[l * static_cast<unsigned>(g.k)] = multiset_narayana(g.k, r, static_cast<int>(l));
  return TruncatedSeries(std::move(c));
}

Rational hodge_littlewood_value(int k, int n, int j) {
  if (k < 0 || n < k || j < 0) throw std::invalid_argument("hodge_littlewood_value needs 0 <= k <= n, j >= 0");
  Integer num = 1, den = 1;
  for (int i = 0; i <= k; ++i) {
    num *= factorial(static_cast<unsigned long>(n + j - i));
    den *= factorial(static_cast<unsigned long>(j + i));
    num *= factorial(static_cast<unsigned long>(i));
    den *= factorial(static_cast<unsigned long>(n - k + i));
  }
  return make_rational(num, den);
}

Polynomial hodge_littlewood_polynomial(int k, int n) {
  if (k < 0 || n < k) throw std::invalid_argument("hodge_littlewood_polynomial needs 0 <= k <= n");
  // (n+j-i)! / (k+j-i)! = (k-i+1+j)_{n-k}; the constants pair up as i! / (n-k+i)!.
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i <= k; ++i) {
    p *= rising_factorial(Polynomial::linear(k - i + 1, 1), static_cast<unsigned>(n - k));
    p *= make_rational(factorial(static_cast<unsigned long>(i)), factorial(static_cast<unsigned long>(n - k + i)));
  }
  return p;
}

namespace {

// Interpolates j -> value(j) at j = 0..degree+2 and confirms three more points.
template <typename F>
Polynomial interpolate_function(int degree, F value, const char* what) {
  std::vector<InterpolationPoint> pts;
  for (int j = 0; j <= degree + 2; ++j) pts.emplace_back(Rational(j), Rational(value(j)));
  Polynomial p = interpolate(pts);
  for (int j = degree + 3; j <= degree + 5; ++j)
    if (p(Rational(j)) != Rational(value(j)))
      throw std::logic_error(std::string(what) + ": interpolated polynomial fails at j=" + std::to_string(j));
  return p;
}

}  // namespace

Polynomial hilbert_polynomial(const GrassmannianId& g) {
  const int r = g.n - g.k + 1;
  Polynomial from_formula = hodge_littlewood_polynomial(g.k - 1, g.n - 1);
  Polynomial from_values =
      interpolate_function(g.dimension(), [&](int j) { return multiset_narayana(g.k, r, j); }, "hilbert_polynomial");
  if (!(from_formula == from_values))
    throw std::logic_error("Hodge–Littlewood polynomial disagrees with the Hilbert function of Gr(" +
                           std::to_string(g.k) + "," + std::to_string(g.n) + ")");
  return from_values;
}

Polynomial h_polynomial(const GrassmannianId& g) {
  Polynomial h = narayana_polynomial(g.k, g.n - g.k);
  // Check a few orders past the degree so that vanishing tails are confirmed.
  const unsigned order = static_cast<unsigned>(std::max(h.degree(), 0)) + 4;
  TruncatedSeries numer = series_scale_binomial_power(hilbert_series_coeffs(g, order), Integer(g.dimension() + 1));
  if (!(numer == TruncatedSeries::from_polynomial(h, order)))
    throw std::logic_error("h-polynomial of Gr(" + std::to_string(g.k) + "," + std::to_string(g.n) +
                           ") disagrees with the Hilbert series");
  return h;
}

SchubertIndex::SchubertIndex(std::vector<int> a_, int n_) : a(std::move(a_)), n(n_) {
  if (a.empty()) throw std::invalid_argument("Schubert index must be nonempty");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw std::invalid_argument("Schubert index entries must be >= 1");
    if (i > 0 && a[i] <= a[i - 1]) throw std::invalid_argument("Schubert index must be strictly increasing");
  }
  if (a.back() > n) throw std::invalid_argument("Schubert index entry exceeds n");
}

SchubertIndex::SchubertIndex(std::vector<int> a_) : SchubertIndex(a_, a_.empty() ? 0 : a_.back()) {}

SchubertIndex SchubertIndex::full(const GrassmannianId& g) {
  std::vector<int> a;
  for (int i = g.n - g.k + 1; i <= g.n; ++i) a.push_back(i);
  return SchubertIndex(std::move(a), g.n);
}

Integer schubert_hilbert_value(const SchubertIndex& s, int j) { return curly_bracket(s.a, j); }

namespace {

int projective_dimension(const SchubertIndex& s) {
  int d = 0;
  for (std::size_t i = 0; i < s.a.size(); ++i) d += s.a[i] - static_cast<int>(i + 1);
  return d;
}

}  // namespace

Polynomial schubert_hilbert_polynomial(const SchubertIndex& s) {
  return interpolate_function(projective_dimension(s), [&](int j) { return curly_bracket(s.a, j); },
                              "schubert_hilbert_polynomial");
}

SchubertDimension schubert_dimension(const SchubertIndex& s) {
  const int d = projective_dimension(s);
  if (schubert_hilbert_polynomial(s).degree() != d)
    throw std::logic_error("Schubert Hilbert polynomial degree differs from sum(a_i - i)");
  return {d, d + 1};
}

std::vector<Integer> schubert_h_vector_two_sum(const SchubertIndex& s) {
  const int d = projective_dimension(s);
  const long D = d + 1;
  std::vector<Integer> h;
  for (int i = 0; i <= d + 1; ++i) {
    Integer v = 0;
    for (int l = 0; l <= i; ++l) {
      Integer term = curly_bracket(s.a, i - l) * binomial(D - 1, l);
      if (l % 2 == 0) v += term; else v -= term;
    }
    for (int l = 0; l < i; ++l) {
      Integer term = curly_bracket(s.a, i - l - 1) * binomial(D - 1, l);
      if (l % 2 == 0) v -= term; else v += term;
    }
    h.push_back(v);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

std::vector<Integer> schubert_h_vector(const SchubertIndex& s) {
  const int d = projective_dimension(s);
  const long D = d + 1;
  std::vector<Integer> h;
  for (int i = 0; i <= d + 1; ++i) {
    Integer v = 0;
    for (int l = 0; l <= i; ++l) {
      Integer term = curly_bracket(s.a, i - l) * binomial(D, l);
      if (l % 2 == 0) v += term; else v -= term;
    }
    h.push_back(v);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  if (h != schubert_h_vector_two_sum(s)) throw std::logic_error("h-vector forms disagree");
  return h;
}

Integer degree(const SchubertIndex& s) {
  const Polynomial p = schubert_hilbert_polynomial(s);
  const int d = std::max(p.degree(), 0);
  const Integer deg = to_integer(p.leading_coefficient() * Rational(factorial(static_cast<unsigned long>(d))));
  Integer sum = 0;
  for (const auto& x : schubert_h_vector(s)) sum += x;
  if (sum != deg) throw std::logic_error("Schubert degree disagrees with the h-vector sum");
  return deg;
}

}  // namespace knarayana
