#pragma once

// Generalized hypergeometric Euler transform.
//
// For parameters a, b, c, f_1..f_r and positive integers m_1..m_r with
// m = sum m_i,
//
//   {r+2}F{r+1}(a, b, f_1+m_1, ..., f_r+m_r; c, f_1, ..., f_r; t)
//     = (1-t)^{c-a-b-m} {m+2}F{m+1}(c-a-m, c-b-m, eta_1+1, ...; c, eta_1, ...; t)
//
// where the eta_i are the zeros of
//
//   Q(t) = sum_{l=0}^{m} (-1)^l A_l (a)_l (b)_l (t)_l (c-a-m-t)_{m-l} (c-b-m-t)_{m-l} G_l(-t),
//   A_l  = sum_{j>=l} S(j, l) sigma_j,   sigma_j = [x^j] prod (f_i + x)_{m_i},
//   G_l(t) = 3F2(l-m, l-t, 1-c-t; 1+b+l-c-t, 1+a+l-c-t; 1).
//
// Since Q(t) = lead * prod (t - eta_i), the factor prod (eta_i + j) / eta_i in
// the transformed coefficients equals Q(-j) / Q(0); no roots are needed for
// exact work.

#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "knarayana/exact.hpp"
#include "knarayana/hypergeom.hpp"
#include "knarayana/polynomial.hpp"
#include "knarayana/series.hpp"

namespace knarayana {

class EulerInput {
 public:
  /// Throws std::invalid_argument if f and m differ in length, some m_i < 1,
  /// or one of (c-a-m)_m, (c-b-m)_m, (1+a+b-c)_m vanishes.
  EulerInput(Rational a, Rational b, Rational c, std::vector<Rational> f, std::vector<unsigned> m);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const std::vector<Rational>& f() const { return f_; }
  const std::vector<unsigned>& m() const { return m_; }
  unsigned m_total() const { return m_total_; }

  /// Left-hand side {r+2}F{r+1}(a, b, f+m; c, f; t).
  HypergeometricSpec left_spec() const;
  /// c - a - b - m
  Rational power_exponent() const { return c_ - a_ - b_ - m_total_; }
  /// c - a - m and c - b - m.
  Rational upper_first() const { return c_ - a_ - m_total_; }
  Rational upper_second() const { return c_ - b_ - m_total_; }

 private:
  Rational a_, b_, c_;
  std::vector<Rational> f_;
  std::vector<unsigned> m_;
  unsigned m_total_ = 0;
};

/// Thrown when the cancellation in Q(t) leaves a nonpolynomial remainder.
class NonPolynomialRemainder : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when Q(0) = 0, i.e. the transform would need a zero root.
class VanishingAtZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// prod (f_i + x)_{m_i} as a polynomial in x.
Polynomial sigma_coeffs(const std::vector<Rational>& f, const std::vector<unsigned>& m);
/// A_l = sum_{j=l}^{deg} S(j, l) sigma_j for l = 0..deg.
std::vector<Rational> a_coeffs(const Polynomial& sigma);
/// G_l(t) as a rational function of t; 0 <= l <= m_total.
RationalFunction g_function(unsigned l, const EulerInput& input);

struct QPolynomial {
  Polynomial poly;
  EulerInput input;

  bool vanishes_at_zero() const { return poly(0) == 0; }
  int degree() const { return poly.degree(); }
  /// Q(-j) / Q(0) = prod (eta_i + j) / eta_i. Throws VanishingAtZero.
  Rational root_product(unsigned j) const;
};

/// Throws NonPolynomialRemainder if the sum does not collapse to a polynomial.
QPolynomial q_polynomial(const EulerInput& input);

/// The right-hand transformed series as a coefficient stream, with Q cached.
class EulerTransform {
 public:
  explicit EulerTransform(EulerInput input);

  const QPolynomial& q() const { return q_; }
  const EulerInput& input() const { return q_.input; }
  /// Coefficient of t^j in {m+2}F{m+1}(c-a-m, c-b-m, eta+1; c, eta; t).
  /// Throws VanishingAtZero when Q(0) = 0.
  Rational coefficient(unsigned j) const;
  TruncatedSeries series(unsigned order) const;

 private:
  QPolynomial q_;
};

Rational transformed_coefficient(const EulerInput& input, unsigned j);

struct IdentityCheck {
  bool holds = true;
  std::optional<unsigned> first_mismatch;
  explicit operator bool() const { return holds; }
};

/// Compares both sides of the transform termwise through t^order.
IdentityCheck verify_euler_identity(const EulerInput& input, unsigned order);

/// A valid input with small random rational parameters, 0 <= m_total <=
/// max_m_total and Q(0) != 0. Uses only raw engine output, so a given seed
/// yields the same inputs on every platform.
EulerInput random_euler_input(std::mt19937_64& rng, unsigned max_m_total = 4);

/// c = 2, a = r+k-2, b = r+k-1, f_i = i, m_i = r-3 (i = 3..k): the left side
/// is 𝔑_{k,r}(t). Needs k >= 2, and r >= 4 when k >= 3 (r >= 2 for k = 2).
EulerInput narayana_euler_input(int k, int r);

/// The transformed coefficient for narayana_euler_input(k, r), which equals
/// N_k(r-1, j).
Rational narayana_product_formula(int k, int r, unsigned j);

struct NumericRoot {
  std::complex<double> value;
  double residual = 0;            // |Q(root)| / max |coefficient|
  std::optional<Rational> exact;  // set when a rational root was confirmed
};

/// Display-only approximations of the zeros of Q.
std::vector<NumericRoot> numeric_roots(const QPolynomial& q);

/// Human-readable product formula for a Narayana input, e.g.
///   N_3(4,j) = 1/(j+1) * C(8,j) * C(9,j) * Q(-j)/Q(0),  Q(t) = ...
/// `latex` selects LaTeX markup.
std::string render_narayana_product_formula(int k, int r, bool latex);

}  // namespace knarayana
