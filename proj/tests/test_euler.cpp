#include <gtest/gtest.h>

#include "generators.hpp"
#include "knarayana/euler.hpp"
#include "knarayana/narayana.hpp"

using namespace knarayana;

namespace {

EulerInput classical(const Rational& a, const Rational& b, const Rational& c) { return EulerInput(a, b, c, {}, {}); }

}  // namespace

TEST(EulerInput, Validation) {
  EXPECT_NO_THROW(EulerInput(5, 6, 2, {3}, {1}));
  EXPECT_THROW(EulerInput(5, 6, 2, {3}, {}), std::invalid_argument);
  EXPECT_THROW(EulerInput(5, 6, 2, {3}, {0}), std::invalid_argument);
  // (c-a-m)_m = (0)_1 = 0
  EXPECT_THROW(EulerInput(2, Rational(1, 2), 3, {4}, {1}), std::invalid_argument);
  // (1+a+b-c)_m = (0)_1
  EXPECT_THROW(EulerInput(Rational(1, 3), Rational(2, 3), 2, {4}, {1}), std::invalid_argument);
  EXPECT_THROW(EulerInput(1, 2, 0, {}, {}), std::invalid_argument);
  const EulerInput in(5, 6, 2, {3, 4}, {1, 2});
  EXPECT_EQ(in.m_total(), 3u);
  EXPECT_EQ(in.power_exponent(), 2 - 5 - 6 - 3);
  EXPECT_EQ(in.upper_first(), -6);
  EXPECT_EQ(in.upper_second(), -7);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_coeffs({3}, {1}), Polynomial({3, 1}));
  const Rational f(2, 5);
  EXPECT_EQ(sigma_coeffs({f}, {2}), Polynomial({f * (f + 1), 2 * f + 1, 1}));
  EXPECT_EQ(sigma_coeffs({}, {}), Polynomial({1}));
  EXPECT_EQ(sigma_coeffs({1, 2}, {1, 3}).degree(), 4);
}

TEST(ACoefficients, Examples) {
  EXPECT_EQ(a_coeffs(Polynomial({3, 1})), (std::vector<Rational>{3, 1}));
  EXPECT_EQ(a_coeffs(Polynomial({1})), (std::vector<Rational>{1}));
  EXPECT_EQ(a_coeffs(sigma_coeffs({3}, {2})), (std::vector<Rational>{12, 8, 1}));
}

// The A_l turn sigma into the falling-factorial basis: sigma(x) = sum A_l x(x-1)...(x-l+1).
TEST(ACoefficients, FallingFactorialBasis) {
  knarayana::testing::Gen gen(53);
  for (int i = 0; i < 30; ++i) {
    const Polynomial sigma = sigma_coeffs({gen.rational(), gen.rational()}, {static_cast<unsigned>(gen.integer(1, 3)), 1});
    const auto A = a_coeffs(sigma);
    for (long x = -3; x <= 5; ++x) {
      Rational s = 0;
      for (std::size_t l = 0; l < A.size(); ++l) s += A[l] * Rational(binomial(x, static_cast<long>(l)) * factorial(l));
      EXPECT_EQ(s, sigma(x));
    }
  }
}

TEST(GFunction, Examples) {
  const EulerInput in(Rational(1, 3), Rational(2, 7), Rational(5, 2), {Rational(3, 2)}, {3});
  EXPECT_EQ(g_function(3, in), RationalFunction(Polynomial({1})));
  EXPECT_EQ(g_function(0, classical(Rational(1, 3), Rational(1, 5), 2)), RationalFunction(Polynomial({1})));

  // l = m-1: one correction term -(l-t)(1-c-t) / ((1+b+l-c-t)(1+a+l-c-t)).
  const RationalFunction g = g_function(2, in);
  const Rational a = in.a(), b = in.b(), c = in.c(), l = 2;
  for (const Rational t : {Rational(0), Rational(1, 4), Rational(-3), Rational(7, 5)}) {
    const Rational expected = 1 - (l - t) * (1 - c - t) / ((1 + b + l - c - t) * (1 + a + l - c - t));
    EXPECT_EQ(g(t), expected);
  }
}

TEST(QPolynomial, ClassicalCaseIsConstant) {
  const QPolynomial q = q_polynomial(classical(Rational(1, 3), Rational(1, 5), Rational(7, 4)));
  EXPECT_EQ(q.degree(), 0);
  EXPECT_FALSE(q.vanishes_at_zero());
}

TEST(QPolynomial, DegreeBound) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const EulerInput in = random_euler_input(rng, 4);
    EXPECT_LE(q_polynomial(in).degree(), static_cast<int>(in.m_total()));
  }
}

TEST(QPolynomial, RootProductNeedsNonzeroConstant) {
  const QPolynomial q{Polynomial({0, 1}), classical(1, 2, Rational(7, 2))};
  EXPECT_THROW(q.root_product(1), VanishingAtZero);
  const QPolynomial ok{Polynomial({2, 1}), classical(1, 2, Rational(7, 2))};
  EXPECT_EQ(ok.root_product(3), Rational(-1, 2));
}

TEST(Transform, ClassicalCoefficients) {
  const Rational a(1, 3), b(1, 5), c(7, 4);
  const EulerInput in = classical(a, b, c);
  EXPECT_EQ(transformed_coefficient(in, 0), 1);
  const HypergeometricSpec rhs({c - a, c - b}, {c});
  for (unsigned j = 0; j < 10; ++j) EXPECT_EQ(transformed_coefficient(in, j), rhs.coefficient(j));
}

TEST(Transform, IdentityExamples) {
  EXPECT_TRUE(verify_euler_identity(classical(Rational(2, 3), Rational(-1, 4), Rational(5, 3)), 20));
  EXPECT_TRUE(verify_euler_identity(EulerInput(5, 6, 2, {3}, {1}), 20));
  EXPECT_TRUE(verify_euler_identity(narayana_euler_input(4, 4), 15));
}

TEST(Transform, RandomInputs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    const EulerInput in = random_euler_input(rng, 4);
    const IdentityCheck check = verify_euler_identity(in, 20);
    EXPECT_TRUE(check.holds) << "sample " << i << " first mismatch " << check.first_mismatch.value_or(0);
  }
}

TEST(Transform, DetectsWrongRightHandSide) {
  // A perturbed Q must break the identity: evaluate with a wrong exponent.
  const EulerInput in(5, 6, 2, {3}, {1});
  const EulerTransform tr(in);
  TruncatedSeries lhs = in.left_spec().series(10);
  TruncatedSeries rhs = series_scale_binomial_power(tr.series(10), Rational(in.power_exponent() + 1));
  EXPECT_FALSE(lhs == rhs);
}

TEST(RandomInput, Deterministic) {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 5; ++i) {
    const EulerInput x = random_euler_input(a), y = random_euler_input(b);
    EXPECT_EQ(x.a(), y.a());
    EXPECT_EQ(x.c(), y.c());
    EXPECT_EQ(x.f(), y.f());
    EXPECT_EQ(x.m(), y.m());
    EXPECT_LE(x.m_total(), 4u);
  }
}

TEST(ProductFormula, Examples) {
  for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(narayana_product_formula(2, 4, j), narayana_classic(3, static_cast<int>(j)));
  const long row[] = {1, 22, 113, 190, 113, 22, 1};
  for (unsigned j = 0; j < 7; ++j) EXPECT_EQ(narayana_product_formula(3, 5, j), row[j]);
  EXPECT_EQ(narayana_product_formula(3, 5, 7), 0);
  for (unsigned j = 0; j <= 4; ++j)
    EXPECT_EQ(narayana_product_formula(3, 4, j), Rational(sulanke_narayana(3, 3, static_cast<int>(j))));
}

TEST(ProductFormula, MatchesSulankeWithIntegralValues) {
  for (int k = 2; k <= 4; ++k)
    for (int r = 4; r <= 6; ++r)
      for (int j = 0; j <= (k - 1) * (r - 2) + 1; ++j) {
        const Rational v = narayana_product_formula(k, r, static_cast<unsigned>(j));
        EXPECT_TRUE(is_integer(v));
        EXPECT_EQ(v, Rational(sulanke_narayana(k, r - 1, j))) << k << ' ' << r << ' ' << j;
      }
}

TEST(ProductFormula, NarayanaInputPreconditions) {
  EXPECT_THROW(narayana_euler_input(1, 4), std::invalid_argument);
  EXPECT_THROW(narayana_euler_input(3, 3), std::invalid_argument);
  EXPECT_NO_THROW(narayana_euler_input(2, 2));
  const EulerInput in = narayana_euler_input(3, 4);
  EXPECT_EQ(in.upper_first(), -4);
  EXPECT_EQ(in.upper_second(), -5);
}

// Q(-j) vanishes inside the support only where the Narayana value does.
TEST(ProductFormula, QRatioConsistency) {
  for (int k = 3; k <= 4; ++k)
    for (int r = 4; r <= 6; ++r) {
      const QPolynomial q = q_polynomial(narayana_euler_input(k, r));
      for (int j = 0; j <= (k - 1) * (r - 2); ++j)
        if (q.poly(Rational(-j)) == 0) EXPECT_EQ(sulanke_narayana(k, r - 1, j), 0);
    }
}

TEST(NumericRoots, Examples) {
  EXPECT_TRUE(numeric_roots(q_polynomial(classical(Rational(1, 3), Rational(1, 5), 2))).empty());

  const QPolynomial lin{Polynomial({3, 2}), classical(1, 2, Rational(7, 2))};
  const auto r1 = numeric_roots(lin);
  ASSERT_EQ(r1.size(), 1u);
  ASSERT_TRUE(r1[0].exact.has_value());
  EXPECT_EQ(*r1[0].exact, Rational(-3, 2));

  const QPolynomial quad = q_polynomial(narayana_euler_input(3, 5));
  ASSERT_EQ(quad.degree(), 2);
  const auto r2 = numeric_roots(quad);
  ASSERT_EQ(r2.size(), 2u);
  for (const auto& root : r2) EXPECT_LT(root.residual, 1e-9);

  const QPolynomial cplx{Polynomial({1, 0, 1}), classical(1, 2, Rational(7, 2))};
  const auto r3 = numeric_roots(cplx);
  ASSERT_EQ(r3.size(), 2u);
  for (const auto& root : r3) {
    EXPECT_NEAR(std::abs(root.value.imag()), 1.0, 1e-12);
    EXPECT_LT(root.residual, 1e-9);
  }
}

TEST(Rendering, ProductFormula) {
  const std::string plain = render_narayana_product_formula(3, 5, false);
  EXPECT_NE(plain.find("N_3(4,j)"), std::string::npos);
  EXPECT_NE(plain.find("C(6,j) * C(7,j) / (j+1)"), std::string::npos);
  const std::string tex = render_narayana_product_formula(3, 5, true);
  EXPECT_NE(tex.find("\\binom{6}{j}"), std::string::npos);
}
