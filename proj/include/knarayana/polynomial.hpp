#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "knarayana/exact.hpp"

namespace knarayana {

/// Dense univariate polynomial over Q, lowest degree first.
/// The zero polynomial stores no coefficients; otherwise the last stored
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c);
  /// c0 + c1 * t
  static Polynomial linear(const Rational& c0, const Rational& c1);
  /// c * t^n
  static Polynomial monomial(const Rational& c, unsigned n);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  Rational operator[](std::size_t i) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  /// p(-t)
  Polynomial reflect() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "t^2 + 3*t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder. Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// (p)(p+1)...(p+n-1) as a polynomial; 1 for n = 0.
Polynomial rising_factorial(const Polynomial& p, unsigned n);

/// numerator / denominator with gcd 1 and a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}
  /// Throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;
  /// f(-t)
  RationalFunction reflect() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace knarayana
