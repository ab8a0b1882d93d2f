#pragma once

#include <span>
#include <utility>

#include "knarayana/polynomial.hpp"

namespace knarayana {

using InterpolationPoint = std::pair<Rational, Rational>;

/// The unique polynomial of degree < points.size() through every point,
/// built in exact Lagrange form. Throws std::invalid_argument on an empty
/// list or duplicate abscissae.
Polynomial interpolate(std::span<const InterpolationPoint> points);

}  // namespace knarayana
