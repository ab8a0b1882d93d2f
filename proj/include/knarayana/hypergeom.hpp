#pragma once

#include <optional>
#include <vector>

#include "knarayana/exact.hpp"
#include "knarayana/series.hpp"

namespace knarayana {

/// pFq(upper; lower; scale * t) as a formal coefficient stream:
///   coefficient j = prod (a_i)_j / (prod (b_i)_j j!) * scale^j.
///
/// A lower parameter may be a nonpositive integer only if some upper
/// parameter is a nonpositive integer of strictly smaller magnitude, so the
/// stream terminates before the lower Pochhammer symbol vanishes.
class HypergeometricSpec {
 public:
  /// Throws std::invalid_argument when the lower parameters are invalid.
  HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument_scale = 1);

  const std::vector<Rational>& upper() const { return upper_; }
  const std::vector<Rational>& lower() const { return lower_; }
  const Rational& argument_scale() const { return scale_; }

  Rational coefficient(unsigned j) const;
  /// Coefficients 0..order, computed with the term ratio.
  TruncatedSeries series(unsigned order) const;

  /// Least d with -d among the upper parameters; coefficients past d vanish.
  std::optional<unsigned> termination_degree() const;

  /// Cancels upper/lower parameter pairs that are equal (as multisets).
  HypergeometricSpec reduce() const;

  friend bool operator==(const HypergeometricSpec&, const HypergeometricSpec&) = default;

 private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  Rational scale_;
};

/// 𝔑_{k,r}(t) = kF_{k-1}(r, ..., r+k-1; 2, ..., k; t).
HypergeometricSpec narayana_series_spec(int k, int r);
/// 𝒩_{k,r}(t) = kF_{k-1}(-r, ..., -r-k+1; 2, ..., k; (-1)^k t).
HypergeometricSpec simple_polynomial_spec(int k, int r);

}  // namespace knarayana
