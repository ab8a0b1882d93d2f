#pragma once

#include <vector>

#include "knarayana/exact.hpp"
#include "knarayana/polynomial.hpp"

namespace knarayana {

/// Formal power series known through t^order. Arithmetic never produces
/// coefficients past the order; mixing orders is an error.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(unsigned order);
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  /// Truncates (or zero-pads) p to the given order.
  static TruncatedSeries from_polynomial(const Polynomial& p, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Drops trailing zero coefficients.
  Polynomial to_polynomial() const { return Polynomial(coeffs_); }

 private:
  void require_same_order(const TruncatedSeries& o) const;
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// (1-t)^p for an integer exponent of either sign, truncated at the given order.
TruncatedSeries binomial_power_series(const Integer& p, unsigned order);
/// (1-t)^e with a rational exponent.
TruncatedSeries binomial_power_series(const Rational& e, unsigned order);

/// s * (1-t)^p
TruncatedSeries series_scale_binomial_power(const TruncatedSeries& s, const Integer& p);
TruncatedSeries series_scale_binomial_power(const TruncatedSeries& s, const Rational& e);

}  // namespace knarayana
