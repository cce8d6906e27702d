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
#include "critcover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "critcover/interval.hpp"

namespace critcover {

DiskSet::DiskSet(std::vector<double> radii) : radii_(std::move(radii)) {
  for (double r : radii_) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("DiskSet: radii must be positive and finite");
    }
  }
  std::sort(radii_.begin(), radii_.end(), std::greater<double>());
  double w = 0.0;
  for (double r : radii_) w += r * r;
  total_weight_ = w;
}

std::optional<double> strip_width_of_disk(double r, double h) {
  if (2.0 * r < h) return std::nullopt;
  const double t = r * r - 0.25 * h * h;
  return 2.0 * std::sqrt(std::max(0.0, t));
}

double inscribed_square_side(double r) { return std::sqrt(2.0) * r; }

namespace {

struct Cell {
  double x0, y0, x1, y1;
  int depth;
  // Indices (into the placement's item list) of disks that can still
  // intersect this cell; disks that provably miss a cell are dropped for the
  // whole subtree below it.
  std::vector<std::uint32_t> candidates;
};

struct VerifierContext {
  std::vector<Point> centers;
  std::vector<double> radii;  // already inflated by slack if any
  std::vector<Interval> radius_sq;
};

// Interval of squared distances from `center` to points of the cell.
Interval cell_dist_sq(const Cell& c, const Point& center) {
  const Interval dx = Interval(c.x0, c.x1) - Interval(center.x);
  const Interval dy = Interval(c.y0, c.y1) - Interval(center.y);
  return square(dx) + square(dy);
}

Interval point_dist_sq(double px, double py, const Point& center) {
  const Interval dx = Interval(px) - Interval(center.x);
  const Interval dy = Interval(py) - Interval(center.y);
  return square(dx) + square(dy);
}

}  // namespace

CoverageVerdict verify_cover_with_slack(const Placement& placement,
                                        const DiskSet& disks, double slack,
                                        int depth_limit,
                                        std::uint64_t max_cells) {
  VerifierContext ctx;
  std::vector<bool> used(disks.size(), false);
  ctx.centers.reserve(placement.items.size());
  ctx.radii.reserve(placement.items.size());
  for (const PlacedDisk& pd : placement.items) {
    if (pd.disk_index >= disks.size()) {
      throw std::invalid_argument("verify_cover: disk index out of range");
    }
    if (used[pd.disk_index]) {
      throw std::invalid_argument("verify_cover: disk used more than once");
    }
    used[pd.disk_index] = true;
    ctx.centers.push_back(pd.center);
    ctx.radii.push_back(disks.radius(pd.disk_index) + slack);
  }
  ctx.radius_sq.reserve(ctx.radii.size());
  for (double r : ctx.radii) ctx.radius_sq.push_back(square(Interval(r)));

  CoverageVerdict verdict;
  if (placement.region.empty()) {
    verdict.outcome = CoverageVerdict::Outcome::covered;
    return verdict;
  }

  Cell root{placement.region.x, placement.region.y,
            placement.region.x + placement.region.w,
            placement.region.y + placement.region.h, 0,
            {}};
  root.candidates.resize(ctx.centers.size());
  for (std::uint32_t i = 0; i < root.candidates.size(); ++i) {
    root.candidates[i] = i;
  }

  std::vector<Cell> stack;
  stack.push_back(std::move(root));
  bool exhausted = false;

  while (!stack.empty()) {
    Cell cell = std::move(stack.back());
    stack.pop_back();
    ++verdict.cells_examined;
    if (verdict.cells_examined > max_cells) {
      exhausted = true;
      break;
    }

    bool inside = false;
    std::vector<std::uint32_t> survivors;
    survivors.reserve(cell.candidates.size());
    for (std::uint32_t i : cell.candidates) {
      const Interval d2 = cell_dist_sq(cell, ctx.centers[i]);
      const Interval r2 = ctx.radius_sq[i];
      if (!d2.valid() || !r2.valid()) {
        survivors.push_back(i);
        continue;
      }
      if (d2.hi() <= r2.lo()) {  // disk definitely contains the whole cell
        inside = true;
        break;
      }
      if (d2.lo() <= r2.hi()) {  // disk possibly meets the cell
        survivors.push_back(i);
      }
    }
    if (inside) continue;

    // No single disk certifies this cell. If its center is definitely outside
    // every surviving disk, that center witnesses non-coverage.
    const double cx = 0.5 * (cell.x0 + cell.x1);
    const double cy = 0.5 * (cell.y0 + cell.y1);
    bool center_possibly_covered = false;
    for (std::uint32_t i : survivors) {
      const Interval d2 = point_dist_sq(cx, cy, ctx.centers[i]);
      if (!(d2.valid() && d2.lo() > ctx.radius_sq[i].hi())) {
        center_possibly_covered = true;
        break;
      }
    }
    if (!center_possibly_covered) {
      verdict.outcome = CoverageVerdict::Outcome::uncovered;
      verdict.witness = Point{cx, cy};
      return verdict;
    }

    if (cell.depth >= depth_limit) {
      exhausted = true;
      break;
    }

    const int d = cell.depth + 1;
    stack.push_back(Cell{cell.x0, cell.y0, cx, cy, d, survivors});
    stack.push_back(Cell{cx, cell.y0, cell.x1, cy, d, survivors});
    stack.push_back(Cell{cell.x0, cy, cx, cell.y1, d, survivors});
    stack.push_back(Cell{cx, cy, cell.x1, cell.y1, d, survivors});
  }

  verdict.outcome = exhausted ? CoverageVerdict::Outcome::inconclusive
                              : CoverageVerdict::Outcome::covered;
  return verdict;
}

CoverageVerdict verify_cover(const Placement& placement, const DiskSet& disks,
                             int depth_limit, std::uint64_t max_cells) {
  return verify_cover_with_slack(placement, disks, 0.0, depth_limit,
                                 max_cells);
}

}  // namespace critcover
