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
#ifndef CRITCOVER_GEOMETRY_HPP
#define CRITCOVER_GEOMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace critcover {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Axis-aligned rectangle. Origin is the bottom-left corner; x grows
/// rightward, y upward.
struct RectRegion {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  double short_side() const { return w < h ? w : h; }
  double long_side() const { return w < h ? h : w; }
  /// max(w,h)/min(w,h), >= 1 for any non-degenerate rectangle.
  double skew() const { return long_side() / short_side(); }
  Point center() const { return {x + 0.5 * w, y + 0.5 * h}; }
  bool empty() const { return w <= 0.0 || h <= 0.0; }
};

/// A multiset of disk radii, sorted non-increasing, with the total weight
/// (sum of squared radii) cached at construction.
class DiskSet {
 public:
  DiskSet() = default;
  /// Sorts the radii; throws std::invalid_argument on non-positive entries.
  explicit DiskSet(std::vector<double> radii);

  const std::vector<double>& radii() const { return radii_; }
  std::size_t size() const { return radii_.size(); }
  bool empty() const { return radii_.empty(); }
  double radius(std::size_t i) const { return radii_[i]; }
  double weight(std::size_t i) const { return radii_[i] * radii_[i]; }
  double total_weight() const { return total_weight_; }

 private:
  std::vector<double> radii_;
  double total_weight_ = 0.0;
};

/// One placed disk: an index into a DiskSet plus a center in world
/// coordinates. Centers may lie outside the target region; only coverage of
/// the region matters.
struct PlacedDisk {
  std::size_t disk_index = 0;
  Point center;
};

/// A (partial) placement of disks meant to cover `region`. Each disk index
/// appears at most once; unused disks are simply absent.
struct Placement {
  RectRegion region;
  std::vector<PlacedDisk> items;
};

/// Result of the union-coverage verifier.
struct CoverageVerdict {
  enum class Outcome { covered, uncovered, inconclusive };

  Outcome outcome = Outcome::inconclusive;
  /// A point of the region outside every placed disk, set iff uncovered.
  std::optional<Point> witness;
  std::uint64_t cells_examined = 0;

  bool covered() const { return outcome == Outcome::covered; }
  bool uncovered() const { return outcome == Outcome::uncovered; }
  bool inconclusive() const { return outcome == Outcome::inconclusive; }
};

/// Independent certificate checker for "the placement covers its region",
/// by adaptive quadtree subdivision over the region:
///  - a cell is accepted when, in outward-rounded interval arithmetic, a
///    single disk definitely contains the whole cell;
///  - a cell whose center point is definitely outside all disks yields
///    uncovered with that center as witness;
///  - otherwise the cell splits into four, down to depth_limit.
/// "covered" and "uncovered" verdicts are both sound; exhausting the depth
/// or cell budget yields inconclusive, which is distinct from uncovered.
/// Throws std::invalid_argument for out-of-range disk indices or duplicate
/// use of a disk.
CoverageVerdict verify_cover(const Placement& placement, const DiskSet& disks,
                             int depth_limit = 40,
                             std::uint64_t max_cells = 80'000'000);

/// Same check with every radius inflated by slack; used only by tests of
/// tight configurations, whose margins are measure-zero without it.
CoverageVerdict verify_cover_with_slack(const Placement& placement,
                                        const DiskSet& disks, double slack,
                                        int depth_limit = 40,
                                        std::uint64_t max_cells = 80'000'000);

/// Maximum width of an h-tall rectangle inscribed in a radius-r disk:
/// 2 sqrt(r^2 - h^2/4). Empty when 2r < h (the placement is impossible and
/// the caller must skip its routine).
std::optional<double> strip_width_of_disk(double r, double h);

/// Side length of the axis-aligned square inscribed in a radius-r disk.
double inscribed_square_side(double r);

// --- Placement serialization -----------------------------------------------
// JSON schema (field names are normative):
//   {"region":{"x":..,"y":..,"w":..,"h":..},
//    "disks":[r1,...],
//    "centers":[[i,x,y],...]}

std::string placement_to_json(const Placement& placement, const DiskSet& disks);
/// Parses the schema above. Throws std::invalid_argument on malformed input.
void placement_from_json(const std::string& text, Placement& placement,
                         DiskSet& disks);

/// SVG rendering: region outline, placed disks as translucent circles, and
/// the uncovered witness (when given) as a marked point.
std::string placement_to_svg(const Placement& placement, const DiskSet& disks,
                             const std::optional<Point>& witness = {});

}  // namespace critcover

#endif  // CRITCOVER_GEOMETRY_HPP
