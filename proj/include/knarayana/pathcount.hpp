#pragma once

// Brute-force lattice path enumerators used as ground truth for the closed
// formulas.
//
// Sulanke model: unit steps in Z^k from 0 to (r,...,r) staying in
// 0 <= x_1 <= ... <= x_k after every step. An ascent is a pair of consecutive
// steps whose second step moves a strictly larger coordinate index than the
// first; repeats of the same coordinate are not ascents.
//
// Narayana model: `steps` steps from 0 to (a_1,...,a_k), every coordinate
// growing by at least one per step and the l-th point satisfying
// x_1 >= ... >= x_k >= l. The round bracket (a)_j counts these paths with
// j + 1 steps.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "knarayana/exact.hpp"

namespace knarayana {

/// Raised when an enumeration would exceed its configured size guard.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationBudget {
  bool unlimited = false;
  int max_sulanke_steps = 16;  // k * r
  int max_path_steps = 6;
  int max_coordinate = 12;

  /// Reads NARAYANA_BUDGET: "off", or "S[:P[:C]]" overriding the Sulanke
  /// step bound S, the path step bound P and the coordinate bound C.
  /// Unset means defaults. Throws std::invalid_argument on bad syntax.
  static EnumerationBudget from_environment();
  static EnumerationBudget parse(const std::string& text);
};

struct SulankePathSpec {
  int k = 1;
  int r = 0;
};

struct NarayanaPathSpec {
  std::vector<int> a;  // nonincreasing
  int steps = 0;
};

/// Ascent statistic -> number of paths. Depth-first search over every path.
/// `jobs` > 1 splits the search over path prefixes; the result does not
/// depend on it.
std::map<int, Integer> count_sulanke_paths(const SulankePathSpec& spec, const EnumerationBudget& budget = {},
                                           unsigned jobs = 1);

/// Total number of chamber paths by dynamic programming over lattice
/// points; independent of the DFS above.
Integer count_sulanke_paths_total_dp(const SulankePathSpec& spec, const EnumerationBudget& budget = {});

/// Number of Narayana-model paths. Zero when a_k < steps.
Integer count_narayana_paths(const NarayanaPathSpec& spec, const EnumerationBudget& budget = {});

}  // namespace knarayana
