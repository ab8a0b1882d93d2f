#include "knarayana/interpolate.hpp"

#include <stdexcept>

namespace knarayana {

Polynomial interpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate abscissa " + to_string(points[i].first));

  // Master polynomial prod (t - x_i); each basis numerator is an exact quotient of it.
  Polynomial master = Polynomial::constant(1);
  for (const auto& [x, y] : points) master *= Polynomial::linear(-x, 1);

  Polynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& [xi, yi] = points[i];
    if (yi == 0) continue;
    Polynomial basis = divmod(master, Polynomial::linear(-xi, 1)).first;
    Rational denom = basis(xi);
    result += basis * Rational(yi / denom);
  }
  return result;
}

}  // namespace knarayana
