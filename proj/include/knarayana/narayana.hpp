#pragma once

// k-Narayana number families.
//
//   N_k(r, j)     sulanke_narayana         chamber paths in Z^k to (r,...,r) by ascents
//   𝔑_k(r, j)     multiset_narayana        order polynomial, = [r,...,r]_j
//   𝒩_k(r, j)     simple_narayana_product  prod_{i<k} C(r+i, j) / C(j+i, j)
//
// plus the three binomial determinants (a)_j, [a]_j, {a}_j. The product family
// 𝒩_k(r, ·) coincides with the round bracket (r+1,...,r+1)_j, not with
// (r,...,r)_j; the two are kept as separate functions and linked by tests.
//
// Relations used throughout:
//   𝔑_{k,r}(t) (1-t)^{k(r-1)+1} = N_{k,r-1}(t)
//   N_{k,r}(t) = N_{r,k}(t)

#include <span>
#include <vector>

#include "knarayana/exact.hpp"
#include "knarayana/polynomial.hpp"
#include "knarayana/series.hpp"

namespace knarayana {

/// (k, r, j): dimension, size, statistic. Checked by validate().
struct NarayanaQuery {
  int k = 1;
  int r = 1;
  int j = 0;

  /// Throws std::invalid_argument unless k >= 1, r >= 1, j >= 0.
  void validate() const;
};

/// Bracket arguments (a_1..a_k) and index j.
struct BracketTuple {
  std::vector<int> a;
  int j = 0;
};

enum class CurlyForm { form1, form2 };

/// (1/r) C(r,j) C(r,j+1).
Integer narayana_classic(int r, int j);

/// det( C(a_l - 1, j + l - i) ).
Integer round_bracket(std::span<const int> a, int j);
/// det( C(a_l + j - 1, j + l - i) ).
Integer square_bracket(std::span<const int> a, int j);
/// form1: det( C(a_{k-l+1} + j + l - i - 1, j + l - i) );
/// form2: det( C(a_i + j - i, j + l - i) ). Both agree on increasing tuples.
Integer curly_bracket(std::span<const int> a, int j, CurlyForm form = CurlyForm::form1);

inline Integer round_bracket(const BracketTuple& t) { return round_bracket(t.a, t.j); }
inline Integer square_bracket(const BracketTuple& t) { return square_bracket(t.a, t.j); }
inline Integer curly_bracket(const BracketTuple& t, CurlyForm form = CurlyForm::form1) {
  return curly_bracket(t.a, t.j, form);
}

/// 𝔑_k(r, j) = prod_{i=1..k} multiset(j+i, r-1) / multiset(i, r-1).
Integer multiset_narayana(int k, int r, int j);
/// 𝒩_k(r, j) = prod_{i=0..k-1} C(r+i, j) / C(j+i, j). Zero once j > r.
Integer simple_narayana_product(int k, int r, int j);
/// N_k(r, j) = sum_l (-1)^{j-l} C(kr+1, j-l) prod_{i<k} C(r+i+l, r) / C(r+i, r).
/// Zero outside 0 <= j <= (r-1)(k-1).
Integer sulanke_narayana(int k, int r, int j);

inline Integer multiset_narayana(const NarayanaQuery& q) { return (q.validate(), multiset_narayana(q.k, q.r, q.j)); }
inline Integer simple_narayana_product(const NarayanaQuery& q) {
  return (q.validate(), simple_narayana_product(q.k, q.r, q.j));
}
inline Integer sulanke_narayana(const NarayanaQuery& q) { return (q.validate(), sulanke_narayana(q.k, q.r, q.j)); }

/// N_{k,r}(t), degree (r-1)(k-1). For r = 0 (the Gr(k,k) case) this is 1.
Polynomial narayana_polynomial(int k, int r);
/// 𝔑_{k,r}(t) through t^order.
TruncatedSeries multiset_series(int k, int r, unsigned order);
/// 𝒩_{k,r}(t) = sum_{j=0}^{r} 𝒩_k(r, j) t^j.
Polynomial simple_polynomial(int k, int r);

std::vector<Integer> narayana_row(int k, int r);

}  // namespace knarayana
