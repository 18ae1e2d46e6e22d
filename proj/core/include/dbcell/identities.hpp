#ifndef DBCELL_IDENTITIES_HPP
#define DBCELL_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dbcell {

struct IdentityReport {
  std::string identity;
  int trials = 0;
  bool pass = false;
  std::string counterexample;  // empty when pass
};

struct IdentitySuiteReport {
  std::vector<IdentityReport> items;
  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};

// Exact verification of the SL_2 product identities, the braid relation of
// the lifts, the generalized-minor invariances, and the cluster identities of
// the move table (A-side in SL2/SL3, X-side in PGL3, y_1..y_6 through the
// 3-mutation pullback).
IdentitySuiteReport identity_suite(std::uint64_t seed = 20240501, int trials = 50);

}  // namespace dbcell

#endif
