#pragma once

#include <cstddef>
#include <vector>

#include "knarayana/exact.hpp"

namespace knarayana {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  /// Zero matrix. Throws std::invalid_argument unless rows, cols > 0.
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument when entries.size() != rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free Bareiss elimination on the integer
/// matrix obtained by clearing denominators row by row.
/// Throws std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

/// Bareiss elimination on an integer matrix given row-major.
Integer bareiss_determinant(std::vector<Integer> entries, std::size_t n);

}  // namespace knarayana
