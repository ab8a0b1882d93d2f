#include <gtest/gtest.h>

#include <functional>

#include "generators.hpp"
#include "knarayana/interpolate.hpp"
#include "knarayana/matrix.hpp"
#include "knarayana/series.hpp"

using namespace knarayana;

namespace {

TruncatedSeries series_of(std::initializer_list<Rational> c) { return TruncatedSeries(std::vector<Rational>(c)); }

Rational cofactor_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Rational> minor;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor.push_back(m(i, j));
    const Rational term = m(0, col) * cofactor_determinant(RationalMatrix(n - 1, n - 1, minor));
    det += col % 2 == 0 ? term : Rational(-term);
  }
  return det;
}

}  // namespace

TEST(Series, BinomialPowerExamples) {
  EXPECT_EQ(series_scale_binomial_power(series_of({1, 0, 0, 0}), Integer(-1)), series_of({1, 1, 1, 1}));
  EXPECT_EQ(series_scale_binomial_power(series_of({1, 1, 0}), Integer(1)), series_of({1, 0, -1}));
  EXPECT_EQ(series_scale_binomial_power(series_of({1, 6}), Integer(5)), series_of({1, 1}));
}

TEST(Series, RationalExponent) {
  const TruncatedSeries half = binomial_power_series(Rational(1, 2), 8);
  EXPECT_EQ(half * half, binomial_power_series(Integer(1), 8));
  EXPECT_EQ(half[1], Rational(-1, 2));
  EXPECT_EQ(half[2], Rational(-1, 8));
}

TEST(Series, PowerThenInverseIsIdentity) {
  knarayana::testing::Gen gen(23);
  for (int i = 0; i < 60; ++i) {
    const unsigned order = static_cast<unsigned>(gen.integer(0, 15));
    std::vector<Rational> c;
    for (unsigned j = 0; j <= order; ++j) c.push_back(gen.rational());
    const TruncatedSeries s(c);
    const Integer p = gen.integer(-12, 12);
    EXPECT_EQ(series_scale_binomial_power(series_scale_binomial_power(s, p), Integer(-p)), s);
    const Rational e = gen.rational();
    EXPECT_EQ(series_scale_binomial_power(series_scale_binomial_power(s, e), Rational(-e)), s);
  }
}

TEST(Series, OrderDiscipline) {
  EXPECT_THROW(series_of({1, 2}) + series_of({1}), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries(std::vector<Rational>{}), std::invalid_argument);
  const TruncatedSeries p = TruncatedSeries::from_polynomial(Polynomial({1, 2, 3, 4}), 1);
  EXPECT_EQ(p, series_of({1, 2}));
  EXPECT_EQ(TruncatedSeries::from_polynomial(Polynomial({1}), 2), series_of({1, 0, 0}));
  EXPECT_EQ((series_of({1, 1}) * series_of({1, 1})).order(), 1u);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(RationalMatrix::identity(3)), 1);
  EXPECT_EQ(determinant(RationalMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(RationalMatrix{{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(determinant(RationalMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(RationalMatrix{{Rational(1, 2), 1}, {1, 4}}), 1);
  EXPECT_THROW(determinant(RationalMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(RationalMatrix(2, 2, {1, 2, 3}), std::invalid_argument);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  knarayana::testing::Gen gen(29);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    std::vector<Rational> e;
    for (std::size_t k = 0; k < n * n; ++k) e.push_back(gen.integer(0, 3) == 0 ? Rational(0) : gen.rational());
    const RationalMatrix m(n, n, e);
    ASSERT_EQ(determinant(m), cofactor_determinant(m));
  }
}

TEST(Determinant, SingularIntegerMatrix) {
  EXPECT_EQ(bareiss_determinant({1, 2, 3, 2, 4, 6, 1, 1, 1}, 3), 0);
  EXPECT_EQ(bareiss_determinant({0, 0, 1, 0, 1, 0, 1, 0, 0}, 3), -1);
}

TEST(Interpolate, Examples) {
  const std::vector<InterpolationPoint> sq = {{0, 0}, {1, 1}, {2, 4}};
  EXPECT_EQ(interpolate(sq), Polynomial({0, 0, 1}));
  const std::vector<InterpolationPoint> c = {{0, 7}};
  EXPECT_EQ(interpolate(c), Polynomial({7}));
  const std::vector<InterpolationPoint> tri = {{0, 1}, {1, 3}, {2, 6}};
  EXPECT_EQ(interpolate(tri), Polynomial({1, Rational(3, 2), Rational(1, 2)}));
}

TEST(Interpolate, Errors) {
  const std::vector<InterpolationPoint> dup = {{1, 0}, {1, 2}};
  EXPECT_THROW(interpolate(dup), std::invalid_argument);
  EXPECT_THROW(interpolate(std::vector<InterpolationPoint>{}), std::invalid_argument);
}

TEST(Interpolate, RoundTrip) {
  knarayana::testing::Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = gen.polynomial(6);
    std::vector<InterpolationPoint> pts;
    std::vector<Rational> xs;
    while (pts.size() < static_cast<std::size_t>(std::max(p.degree(), 0) + 1 + gen.integer(0, 2))) {
      const Rational x = gen.rational(20, 3);
      if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
      xs.push_back(x);
      pts.emplace_back(x, p(x));
    }
    const Polynomial q = interpolate(pts);
    EXPECT_EQ(q, p);
    for (const auto& [x, y] : pts) EXPECT_EQ(q(x), y);
  }
}
