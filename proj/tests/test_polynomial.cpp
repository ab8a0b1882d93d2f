#include <gtest/gtest.h>

#include "generators.hpp"
#include "knarayana/polynomial.hpp"

using namespace knarayana;

TEST(Polynomial, TrimsAndDegree) {
  EXPECT_EQ(Polynomial({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(Polynomial({0, 0}).degree(), -1);
  EXPECT_TRUE(Polynomial().is_zero());
  EXPECT_EQ(Polynomial::monomial(3, 4).degree(), 4);
  EXPECT_EQ(Polynomial::monomial(0, 4).degree(), -1);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a{1, 1};   // 1 + t
  const Polynomial b{1, -1};  // 1 - t
  EXPECT_EQ(a * b, Polynomial({1, 0, -1}));
  EXPECT_EQ(a + b, Polynomial({2}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ(-a, Polynomial({-1, -1}));
  EXPECT_EQ(a * Rational(1, 2), Polynomial({Rational(1, 2), Rational(1, 2)}));
}

TEST(Polynomial, EvaluateReflectMonic) {
  const Polynomial p{1, 3, 1};
  EXPECT_EQ(p(2), 11);
  EXPECT_EQ(p.reflect(), Polynomial({1, -3, 1}));
  EXPECT_EQ(Polynomial({2, 4}).monic(), Polynomial({Rational(1, 2), 1}));
  EXPECT_EQ(p.leading_coefficient(), 1);
  EXPECT_EQ(p[7], 0);
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(Polynomial({1, 3, 1}).to_string(), "t^2 + 3*t + 1");
  EXPECT_EQ(Polynomial({0, -1}).to_string("j"), "-j");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial({Rational(1, 2), 0, -2}).to_string(), "-2*t^2 + 1/2");
}

TEST(Polynomial, RisingFactorial) {
  // (t)_3 = t(t+1)(t+2)
  EXPECT_EQ(rising_factorial(Polynomial({0, 1}), 3), Polynomial({0, 2, 3, 1}));
  EXPECT_EQ(rising_factorial(Polynomial({5, 1}), 0), Polynomial({1}));
}

TEST(Polynomial, DivmodProperty) {
  knarayana::testing::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = gen.polynomial(6);
    Polynomial b = gen.polynomial(4);
    if (b.is_zero()) b = Polynomial({1});
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
  EXPECT_THROW(divmod(Polynomial({1}), Polynomial()), std::domain_error);
}

TEST(Polynomial, GcdProperty) {
  knarayana::testing::Gen gen(5);
  for (int i = 0; i < 100; ++i) {
    Polynomial common = gen.polynomial(2);
    if (common.is_zero()) continue;
    const Polynomial a = common * gen.polynomial(3);
    const Polynomial b = common * gen.polynomial(3);
    if (a.is_zero() || b.is_zero()) continue;
    const Polynomial g = gcd(a, b);
    EXPECT_EQ(g.leading_coefficient(), 1);
    EXPECT_TRUE(divmod(a, g).second.is_zero());
    EXPECT_TRUE(divmod(b, g).second.is_zero());
    EXPECT_TRUE(divmod(g, common.monic()).second.is_zero());
  }
  EXPECT_EQ(gcd(Polynomial(), Polynomial()), Polynomial());
}

TEST(RationalFunction, Normalizes) {
  // (t^2 - 1) / (2t + 2) = (t - 1) / 2
  const RationalFunction f(Polynomial({-1, 0, 1}), Polynomial({2, 2}));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.numerator(), Polynomial({Rational(-1, 2), Rational(1, 2)}));
  EXPECT_EQ(f.denominator(), Polynomial({1}));
  EXPECT_THROW(RationalFunction(Polynomial({1}), Polynomial()), std::domain_error);
}

TEST(RationalFunction, ArithmeticAndPoles) {
  const RationalFunction a(Polynomial({1}), Polynomial({0, 1}));   // 1/t
  const RationalFunction b(Polynomial({1}), Polynomial({1, 1}));   // 1/(t+1)
  const RationalFunction s = a + b;                                // (2t+1)/(t^2+t)
  EXPECT_EQ(s(1), Rational(3, 2));
  EXPECT_THROW(s(0), std::domain_error);
  EXPECT_EQ((a * RationalFunction(Polynomial({0, 1}))), RationalFunction(Polynomial({1})));
  EXPECT_EQ(b.reflect()(Rational(-2)), Rational(1, 3));
}

TEST(RationalFunction, SumPropertyAgainstEvaluation) {
  knarayana::testing::Gen gen(17);
  for (int i = 0; i < 100; ++i) {
    Polynomial d1 = gen.polynomial(2), d2 = gen.polynomial(2);
    if (d1.is_zero() || d2.is_zero()) continue;
    const RationalFunction f(gen.polynomial(3), d1), g(gen.polynomial(3), d2);
    const Rational x = gen.rational();
    if (d1(x) == 0 || d2(x) == 0) continue;
    EXPECT_EQ((f + g)(x), f(x) + g(x));
    EXPECT_EQ((f * g)(x), f(x) * g(x));
  }
}
