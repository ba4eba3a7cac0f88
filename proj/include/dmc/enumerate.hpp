#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dmc/sequences.hpp"

namespace dmc {

struct CensusOptions {
  bool count_only = false;
  std::uint64_t limit = 0;  // 0 = unlimited
  int jobs = 1;
  std::string checkpoint_path;  // empty = no checkpointing
  // Called after each finished work unit with (done units, total units,
  // pairs so far). Invoked under a lock; keep it cheap.
  std::function<void(int, int, std::uint64_t)> on_progress;
};

struct CensusResult {
  int m = 0;
  std::uint64_t count = 0;
  std::vector<SetPair> pairs;  // empty in count-only mode; sorted otherwise
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  bool truncated = false;  // limit stopped the search; counts are partial
};

// Exhaustive enumeration of admissible pairs in set form. Sets grow in a
// canonical order (anchors 1 and 0 first, then by (magnitude, sign) with
// the positive value first, sides alternating), so every pair of sets is
// reached exactly once and the sorted output is identical across runs,
// thread counts and checkpoint resumes. Work splits into independent
// units keyed by the second element of a, which is how the checkpoint
// file tracks completed work.
CensusResult enumerate_pair_sets(int m, const CensusOptions& opts = {});

// Free-cell order of the labeling brute force; the count must not depend
// on it.
enum class FillOrder { forward, reverse };

// Count all distance magic labelings of C_m x C_n by depth-first search.
// Only the first two columns are free: column n-1 is forced by the zero
// weights of column 0, columns 2..n-2 by those of columns 1..n-3, and the
// two remaining columns of weights are checked at the end. Exact and
// exhaustive, so it is restricted to mn <= 40.
std::uint64_t enumerate_labelings_bruteforce(int m, int n,
                                             FillOrder order =
                                                 FillOrder::forward);

// The consistency identity tying the two counters together for m = 3:
// labelings(3, 6) == 2 * 3^2 * census(3) * ((3-1)!)^2.
bool census_cross_check(int m);

}  // namespace dmc
