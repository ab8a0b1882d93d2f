#include <gtest/gtest.h>

#include <thread>

#include "knarayana/narayana.hpp"

using namespace knarayana;

namespace {

std::vector<int> rep(int v, int n) { return std::vector<int>(static_cast<std::size_t>(n), v); }

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(NarayanaQuery, Validation) {
  EXPECT_NO_THROW((NarayanaQuery{1, 1, 0}.validate()));
  EXPECT_THROW((NarayanaQuery{0, 1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((NarayanaQuery{1, 0, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((NarayanaQuery{1, 1, -1}.validate()), std::invalid_argument);
  EXPECT_THROW(multiset_narayana(NarayanaQuery{2, 0, 1}), std::invalid_argument);
}

TEST(Classic, Examples) {
  EXPECT_EQ(narayana_classic(3, 1), 3);
  EXPECT_EQ(narayana_classic(4, 1), 6);
  for (int r = 1; r < 10; ++r) EXPECT_EQ(narayana_classic(r, 0), 1);
  EXPECT_EQ(narayana_classic(5, 2), 20);
}

TEST(RoundBracket, Examples) {
  for (int a = 1; a < 8; ++a)
    for (int j = 0; j < 8; ++j) EXPECT_EQ(round_bracket(std::vector<int>{a}, j), binomial(a - 1, j));
  EXPECT_EQ(round_bracket(rep(3, 2), 1), 3);
  EXPECT_EQ(round_bracket(rep(4, 2), 2), 6);
  EXPECT_EQ(round_bracket(BracketTuple{{4, 4}, 2}), 6);
}

TEST(SquareBracket, Examples) {
  for (int a = 1; a < 8; ++a)
    for (int j = 0; j < 8; ++j) EXPECT_EQ(square_bracket(std::vector<int>{a}, j), multiset(a, j));
  EXPECT_EQ(square_bracket(rep(3, 2), 1), 6);
  EXPECT_EQ(square_bracket(rep(3, 2), 2), 20);
}

TEST(CurlyBracket, Examples) {
  const std::vector<int> a{3, 4};
  EXPECT_EQ(curly_bracket(a, 1), 6);
  EXPECT_EQ(curly_bracket(a, 1, CurlyForm::form2), 6);
  EXPECT_EQ(curly_bracket(rep(4, 2), 1), 6);
  for (int x = 1; x < 7; ++x)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(curly_bracket(std::vector<int>{x}, j), multiset(x, j));
}

TEST(Brackets, RejectMalformedTuples) {
  EXPECT_THROW(round_bracket(std::vector<int>{}, 1), std::invalid_argument);
  EXPECT_THROW(square_bracket(std::vector<int>{0, 2}, 1), std::invalid_argument);
  EXPECT_THROW(curly_bracket(std::vector<int>{2, 3}, -1), std::invalid_argument);
}

TEST(MultisetNarayana, Examples) {
  for (int r = 1; r < 7; ++r)
    for (int j = 0; j < 7; ++j) EXPECT_EQ(multiset_narayana(1, r, j), multiset(r, j));
  EXPECT_EQ(multiset_narayana(2, 3, 2), 20);
  EXPECT_EQ(multiset_narayana(3, 5, 1), 35);
  EXPECT_EQ(multiset_narayana(NarayanaQuery{2, 3, 3}), 50);
}

TEST(SimpleNarayana, Examples) {
  EXPECT_EQ(simple_narayana_product(2, 3, 1), 6);
  EXPECT_EQ(simple_narayana_product(2, 4, 2), 20);
  for (int k = 1; k < 5; ++k) EXPECT_EQ(simple_narayana_product(k, 5, 0), 1);
  EXPECT_EQ(simple_narayana_product(3, 2, 3), 0);
}

TEST(Sulanke, Examples) {
  EXPECT_EQ(narayana_row(2, 3), ints({1, 3, 1}));
  EXPECT_EQ(narayana_row(3, 4), ints({1, 22, 113, 190, 113, 22, 1}));
  for (int k = 1; k < 5; ++k)
    for (int r = 1; r < 6; ++r) EXPECT_EQ(sulanke_narayana(k, r, 0), 1);
}

TEST(Sulanke, OutOfSupportIsZero) {
  EXPECT_EQ(sulanke_narayana(3, 4, 7), 0);
  EXPECT_EQ(sulanke_narayana(2, 5, 9), 0);
  EXPECT_EQ(sulanke_narayana(1, 5, 1), 0);
}

TEST(Sulanke, RowSumsAreMultidimensionalCatalan) {
  // k=3: 3-dimensional Catalan numbers 1, 5, 42, 462, 6006.
  const long cat3[] = {1, 5, 42, 462, 6006};
  for (int r = 1; r <= 5; ++r) {
    Integer s = 0;
    for (const auto& x : narayana_row(3, r)) s += x;
    EXPECT_EQ(s, cat3[r - 1]) << r;
  }
}

TEST(Polynomials, Examples) {
  EXPECT_EQ(narayana_polynomial(2, 3), Polynomial({1, 3, 1}));
  for (int r = 1; r < 6; ++r) EXPECT_EQ(narayana_polynomial(1, r), Polynomial({1}));
  EXPECT_EQ(narayana_polynomial(3, 0), Polynomial({1}));
  EXPECT_EQ(multiset_series(2, 3, 3), TruncatedSeries(std::vector<Rational>{1, 6, 20, 50}));
  EXPECT_EQ(simple_polynomial(2, 3), Polynomial({1, 6, 6, 1}));
}

TEST(Polynomials, DegreeAndPalindromy) {
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= 6; ++r) {
      const auto row = narayana_row(k, r);
      ASSERT_EQ(static_cast<int>(row.size()) - 1, (r - 1) * (k - 1));
      EXPECT_TRUE(std::equal(row.begin(), row.end(), row.rbegin()));
    }
}

TEST(Narayana, ConcurrentCallsAgree) {
  std::vector<std::vector<Integer>> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&results, i] { results[i] = narayana_row(4, 5); });
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, results.front());
}
