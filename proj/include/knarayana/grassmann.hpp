#pragma once

// Hilbert data of Grassmannians Gr(k,n) in the Plücker embedding and of their
// Schubert varieties X(a_1 < ... < a_k).
//
// The Hilbert function of Gr(k,n) is j -> 𝔑_k(n-k+1, j) and the h-polynomial
// is N_{k,n-k}(t), over (1-t)^{k(n-k)+1}. For X(a) the Hilbert function is
// j -> {a_1,...,a_k}_j.

#include <vector>

#include "knarayana/exact.hpp"
#include "knarayana/polynomial.hpp"
#include "knarayana/series.hpp"

namespace knarayana {

struct GrassmannianId {
  int k = 1;
  int n = 1;
  /// Throws std::invalid_argument unless 1 <= k <= n.
  GrassmannianId(int k, int n);

  int dimension() const { return k * (n - k); }
};

enum class HilbertGrading {
  plucker,        // R_j = degree-j Plücker polynomials
  invariant_ring  // C[V^n]^{SL_k}: R_j sits in degree k*j
};

TruncatedSeries hilbert_series_coeffs(const GrassmannianId& g, unsigned order,
                                      HilbertGrading grading = HilbertGrading::plucker);

/// d_{k,n}(j) = (n+j)!...(n+j-k)! / (j!...(k+j)!) * 1!...k! / ((n-k)!...n!)
/// evaluated literally from factorials. Gr(k,n) corresponds to (k-1, n-1).
Rational hodge_littlewood_value(int k, int n, int j);

/// The same formula as a polynomial in j.
Polynomial hodge_littlewood_polynomial(int k, int n);

/// Polynomial in j of degree k(n-k). Built from the shifted Hodge–Littlewood
/// formula and by interpolating the Hilbert function; throws std::logic_error
/// if the two disagree.
Polynomial hilbert_polynomial(const GrassmannianId& g);

/// N_{k,n-k}(t), checked against (1-t)^{k(n-k)+1} times the Hilbert series.
Polynomial h_polynomial(const GrassmannianId& g);

/// Strictly increasing 1 <= a_1 < ... < a_k <= n.
struct SchubertIndex {
  std::vector<int> a;
  int n = 0;
  /// Throws std::invalid_argument on a malformed index.
  SchubertIndex(std::vector<int> a, int n);
  /// n defaults to a_k.
  explicit SchubertIndex(std::vector<int> a);

  /// The index of Gr(k,n) itself: (n-k+1, ..., n).
  static SchubertIndex full(const GrassmannianId& g);
};

struct SchubertDimension {
  int projective = 0;  // sum (a_i - i)
  int cone = 1;        // Krull dimension of the coordinate ring
};

Integer schubert_hilbert_value(const SchubertIndex& s, int j);

/// Interpolated at j = 0..d+2 and confirmed at three more points.
Polynomial schubert_hilbert_polynomial(const SchubertIndex& s);

/// Throws std::logic_error if the interpolated degree differs.
SchubertDimension schubert_dimension(const SchubertIndex& s);

/// h_i = sum_{l<=i} (-1)^l {a}_{i-l} C(D, l), D the cone dimension, for
/// i = 0..d+1 with trailing zeros dropped. Cross-checked against the
/// two-sum form in D-1.
std::vector<Integer> schubert_h_vector(const SchubertIndex& s);

/// sum_{l<=i} (-1)^l {a}_{i-l} C(D-1, l) - sum_{l<i} (-1)^l {a}_{i-l-1} C(D-1, l)
std::vector<Integer> schubert_h_vector_two_sum(const SchubertIndex& s);

/// d! times the leading coefficient of the Hilbert polynomial; equals sum h_i.
Integer degree(const SchubertIndex& s);

}  // namespace knarayana
