#include <gtest/gtest.h>

#include "knarayana/identities.hpp"

using namespace knarayana;

TEST(IdentityLedger, DefaultGridPasses) {
  const auto results = run_identity_ledger(IdentityGrid{});
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}

TEST(IdentityLedger, GroupFilter) {
  const auto results = run_identity_ledger(IdentityGrid{}, {IdentityGroup::hypergeometric});
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_EQ(r.group, IdentityGroup::hypergeometric);
}

TEST(IdentityLedger, SeedChangesOnlyRandomSamples) {
  IdentityGrid a, b;
  a.seed = 1;
  b.seed = 2;
  a.euler_samples = b.euler_samples = 5;
  const auto ra = run_identity_ledger(a, {IdentityGroup::euler});
  const auto rb = run_identity_ledger(b, {IdentityGroup::euler});
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].cases, rb[i].cases);
    EXPECT_TRUE(ra[i].passed && rb[i].passed);
  }
}
