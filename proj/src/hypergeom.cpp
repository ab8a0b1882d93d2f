#include "knarayana/hypergeom.hpp"

#include <algorithm>
#include <stdexcept>

namespace knarayana {

HypergeometricSpec::HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower,
                                       Rational argument_scale)
    : upper_(std::move(upper)), lower_(std::move(lower)), scale_(std::move(argument_scale)) {
  for (const auto& b : lower_) {
    if (!is_nonpositive_integer(b)) continue;
    const bool shielded = std::any_of(upper_.begin(), upper_.end(),
                                      [&](const Rational& a) { return is_nonpositive_integer(a) && a > b; });
    if (!shielded)
      throw std::invalid_argument("lower parameter " + to_string(b) +
                                  " is a nonpositive integer reached before the series terminates");
  }
}

std::optional<unsigned> HypergeometricSpec::termination_degree() const {
  std::optional<unsigned> d;
  for (const auto& a : upper_) {
    if (!is_nonpositive_integer(a)) continue;
    const auto v = static_cast<unsigned>(Integer(-a.get_num()).get_ui());
    if (!d || v < *d) d = v;
  }
  return d;
}

Rational HypergeometricSpec::coefficient(unsigned j) const {
  if (auto d = termination_degree(); d && j > *d) return 0;
  Rational num = 1, den = factorial(j);
  for (const auto& a : upper_) num *= pochhammer(a, j);
  for (const auto& b : lower_) den *= pochhammer(b, j);
  if (den == 0) throw std::domain_error("lower Pochhammer symbol vanishes");
  Rational s = 1;
  for (unsigned i = 0; i < j; ++i) s *= scale_;
  return num / den * s;
}

TruncatedSeries HypergeometricSpec::series(unsigned order) const {
  std::vector<Rational> c(order + 1, 0);
  const auto stop = termination_degree();
  Rational term = 1;
  for (unsigned j = 0; j <= order; ++j) {
    if (stop && j > *stop) break;
    c[j] = term;
    // term_{j+1} / term_j = prod (a+j) / (prod (b+j) (j+1)) * scale
    Rational ratio = scale_ / (j + 1);
    for (const auto& a : upper_) ratio *= (a + j);
    if (ratio == 0) break;
    for (const auto& b : lower_) {
      Rational f = b + j;
      if (f == 0) throw std::domain_error("lower Pochhammer symbol vanishes");
      ratio /= f;
    }
    term *= ratio;
  }
  return TruncatedSeries(std::move(c));
}

HypergeometricSpec HypergeometricSpec::reduce() const {
  std::vector<Rational> up = upper_;
  std::vector<Rational> low;
  for (const auto& b : lower_) {
    auto it = std::find(up.begin(), up.end(), b);
    if (it != up.end())
      up.erase(it);
    else
      low.push_back(b);
  }
  return HypergeometricSpec(std::move(up), std::move(low), scale_);
}

HypergeometricSpec narayana_series_spec(int k, int r) {
  if (k < 1 || r < 1) throw std::invalid_argument("narayana_series_spec needs k, r >= 1");
  std::vector<Rational> up, low;
  for (int i = 0; i < k; ++i) up.emplace_back(r + i);
  for (int i = 2; i <= k; ++i) low.emplace_back(i);
  return HypergeometricSpec(std::move(up), std::move(low), 1);
}

HypergeometricSpec simple_polynomial_spec(int k, int r) {
  if (k < 1 || r < 0) throw std::invalid_argument("simple_polynomial_spec needs k >= 1, r >= 0");
  std::vector<Rational> up, low;
  for (int i = 0; i < k; ++i) up.emplace_back(-r - i);
  for (int i = 2; i <= k; ++i) low.emplace_back(i);
  return HypergeometricSpec(std::move(up), std::move(low), k % 2 == 0 ? 1 : -1);
}

}  // namespace knarayana
