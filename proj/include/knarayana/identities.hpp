#pragma once

// Named identities among the Narayana families, the hypergeometric
// representations, the Euler transform and the Grassmannian data, each
// checked exactly over a bounded grid.

#include <cstdint>
#include <string>
#include <vector>

namespace knarayana {

struct IdentityGrid {
  int k_max = 4;
  int r_max = 6;
  int j_max = 8;
  unsigned euler_samples = 25;
  unsigned euler_order = 20;
  std::uint64_t seed = 1;
};

enum class IdentityGroup { narayana, hypergeometric, euler, grassmann, oracle };

const char* to_string(IdentityGroup g);

struct IdentityResult {
  std::string name;
  IdentityGroup group = IdentityGroup::narayana;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failing case, empty on success
};

/// Runs the identities of the selected groups; all groups when `groups` is empty.
std::vector<IdentityResult> run_identity_ledger(const IdentityGrid& grid, const std::vector<IdentityGroup>& groups = {});

}  // namespace knarayana
