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
#include "critcover/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace critcover {

namespace {

SplitResult finish(const DiskSet& all, std::vector<std::size_t> ia,
                   std::vector<std::size_t> ib) {
  SplitResult out;
  std::vector<double> ra, rb;
  double wa = 0.0, wb = 0.0;
  ra.reserve(ia.size());
  rb.reserve(ib.size());
  for (std::size_t i : ia) {
    ra.push_back(all.radius(i));
    wa += all.weight(i);
  }
  for (std::size_t i : ib) {
    rb.push_back(all.radius(i));
    wb += all.weight(i);
  }
  out.group_a = ra.empty() ? DiskSet() : DiskSet(std::move(ra));
  out.group_b = rb.empty() ? DiskSet() : DiskSet(std::move(rb));
  out.indices_a = std::move(ia);
  out.indices_b = std::move(ib);
  out.weight_gap = std::fabs(wa - wb);
  return out;
}

}  // namespace

SplitResult greedy_split(const DiskSet& disks) {
  if (disks.size() < 2) {
    throw std::invalid_argument("greedy_split: need at least 2 disks");
  }
  std::vector<std::size_t> ia, ib;
  double wa = 0.0, wb = 0.0;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (wa <= wb) {  // ties go to group_a
      ia.push_back(i);
      wa += disks.weight(i);
    } else {
      ib.push_back(i);
      wb += disks.weight(i);
    }
  }
  return finish(disks, std::move(ia), std::move(ib));
}

SplitResult seeded_greedy_split(const DiskSet& all,
                                const std::vector<std::size_t>& seed_a,
                                const std::vector<std::size_t>& seed_b,
                                const std::vector<std::size_t>& rest) {
  std::vector<char> seen(all.size(), 0);
  auto mark = [&](const std::vector<std::size_t>& v) {
    for (std::size_t i : v) {
      if (i >= all.size() || seen[i]) {
        throw std::invalid_argument(
            "seeded_greedy_split: index out of range or reused");
      }
      seen[i] = 1;
    }
  };
  mark(seed_a);
  mark(seed_b);
  mark(rest);

  std::vector<std::size_t> ia = seed_a, ib = seed_b;
  double wa = 0.0, wb = 0.0;
  for (std::size_t i : seed_a) wa += all.weight(i);
  for (std::size_t i : seed_b) wb += all.weight(i);

  std::vector<std::size_t> order = rest;
  std::sort(order.begin(), order.end());  // DiskSet is sorted by radius desc
  for (std::size_t i : order) {
    if (wa <= wb) {
      ia.push_back(i);
      wa += all.weight(i);
    } else {
      ib.push_back(i);
      wb += all.weight(i);
    }
  }
  return finish(all, std::move(ia), std::move(ib));
}

std::pair<std::uint64_t, double> best_seed_partition(
    const std::vector<double>& weights) {
  if (weights.size() > 16) {
    throw std::invalid_argument("best_seed_partition: too many disks");
  }
  const std::uint64_t n = weights.size();
  double total = 0.0;
  for (double w : weights) total += w;
  std::uint64_t best_mask = 0;
  double best_gap = total;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    double wa = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask & (1ull << i)) wa += weights[i];
    }
    const double gap = std::fabs(2.0 * wa - total);
    if (gap < best_gap) {
      best_gap = gap;
      best_mask = mask;
    }
  }
  return {best_mask, best_gap};
}

}  // namespace critcover
