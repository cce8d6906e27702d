/*
 * Copyright 2025 The critcover authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CRITCOVER_SPLITTING_HPP
#define CRITCOVER_SPLITTING_HPP

#include <cstddef>
#include <vector>

#include "critcover/geometry.hpp"

namespace critcover {

/// Result of a greedy two-way partition. The two groups together are exactly
/// the input multiset, and the weight gap never exceeds the weight of the
/// smallest disk in the heavier group. indices_a/indices_b refer to positions
/// in the input DiskSet so callers can keep track of disk identity.
struct SplitResult {
  DiskSet group_a;
  DiskSet group_b;
  std::vector<std::size_t> indices_a;
  std::vector<std::size_t> indices_b;
  double weight_gap = 0.0;
};

/// Deterministic greedy partition: iterate disks in non-increasing radius
/// order, appending each to the lighter group; ties go to group_a. Requires
/// at least 2 disks (throws std::invalid_argument otherwise).
SplitResult greedy_split(const DiskSet& disks);

/// Continues the greedy assignment from two seeded groups. `rest` indices are
/// positions in `all` that belong to neither seed. Seeds are given as index
/// lists into `all` as well, so the result's index bookkeeping stays in one
/// frame.
SplitResult seeded_greedy_split(const DiskSet& all,
                                const std::vector<std::size_t>& seed_a,
                                const std::vector<std::size_t>& seed_b,
                                const std::vector<std::size_t>& rest);

/// Exhaustive helper for up to 7 disks: the partition of {0..n-1} into two
/// groups minimizing |W(A) - W(B)|, as (mask of group_a, minimal gap).
std::pair<std::uint64_t, double> best_seed_partition(
    const std::vector<double>& weights);

}  // namespace critcover

#endif  // CRITCOVER_SPLITTING_HPP
