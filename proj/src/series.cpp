#include "knarayana/series.hpp"

#include <stdexcept>
#include <string>

namespace knarayana {

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1, 0) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, unsigned order) {
  TruncatedSeries s(order);
  for (unsigned i = 0; i <= order; ++i) s.coeffs_[i] = p[i];
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
  if (order() != o.order())
    throw std::invalid_argument("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(o.order()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  require_same_order(o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries binomial_power_series(const Integer& p, unsigned order) {
  std::vector<Rational> c(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    Integer b = binomial(p, Integer(i));
    c[i] = (i % 2 == 0) ? Rational(b) : Rational(-b);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_power_series(const Rational& e, unsigned order) {
  if (is_integer(e)) return binomial_power_series(e.get_num(), order);
  std::vector<Rational> c(order + 1);
  // C(e, i+1) = C(e, i) * (e - i) / (i + 1)
  Rational term = 1;
  for (unsigned i = 0; i <= order; ++i) {
    c[i] = (i % 2 == 0) ? term : Rational(-term);
    term *= (e - i);
    term /= (i + 1);
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale_binomial_power(const TruncatedSeries& s, const Integer& p) {
  return s * binomial_power_series(p, s.order());
}

TruncatedSeries series_scale_binomial_power(const TruncatedSeries& s, const Rational& e) {
  return s * binomial_power_series(e, s.order());
}

}  // namespace knarayana
