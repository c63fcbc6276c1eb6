#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hsd/domains.hpp"
#include "hsd/rational.hpp"

namespace hsd {

/// Aggregated result of the cross-module invariant suite.
struct CheckReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first ~40 failure descriptions

  bool ok() const { return failed == 0; }
};

/// Primary-input domains: I with q <= p, II/III/IV up to the grid bound,
/// V and VI.  small: p <= 6, n <= 8; full: p <= 10, n <= 12.
std::vector<Domain> standard_domain_grid(bool full);

/// Valid catalog indices over the grid bounds (small: d <= 3, n <= 9;
/// full: d <= 5, n <= 12, s <= 5), E6-28 and E7-31 included.
std::vector<KIndex> standard_index_grid(bool full);

/// Every admissible archimedean profile for the index with at most max_f
/// places (signature lists non-decreasing in q to avoid permutations);
/// invokes fn on each valid QGroup.
void for_each_qgroup(const KIndex& ix, int max_f,
                     const std::function<void(const QGroup&)>& fn);

/// Runs every module's invariant section over the standard grid.
CheckReport run_invariant_suite(bool full_grid);

}  // namespace hsd
