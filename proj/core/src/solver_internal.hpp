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
#ifndef CRITCOVER_SOLVER_INTERNAL_HPP
#define CRITCOVER_SOLVER_INTERNAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "critcover/geometry.hpp"
#include "critcover/interval.hpp"
#include "critcover/solver.hpp"
#include "critcover/thresholds.hpp"

namespace critcover::detail {

// Gaps and slivers up to this size count as closed in the solver's runtime
// checks; they are absorbed by the documented test-slack policy for tight
// configurations. The prover never uses this tolerance.
inline constexpr double kClosureTol = 1e-12;

// A normalized task: rectangle [0, lambda] x [0, 1], disks sorted
// non-increasing, all lengths divided by the original shorter side.
struct Ctx {
  double lambda = 1.0;
  std::vector<double> radius;        // sorted non-increasing
  std::vector<double> suffix_weight; // suffix_weight[i] = sum_{j>=i} r_j^2
  double total_weight = 0.0;
  Regime regime = Regime::main_theorem;
  double sigma = 0.0;                // normalized weight bound (size_bounded)
  double shrink = 0.0;               // placement margin reserve

  std::size_t n() const { return radius.size(); }
  double r(std::size_t i) const { return radius[i]; }
  double w(std::size_t i) const { return radius[i] * radius[i]; }
  // Total weight of disks i..n-1.
  double tail(std::size_t i) const {
    return i < suffix_weight.size() ? suffix_weight[i] : 0.0;
  }
  // Total weight of the prefix 0..i-1.
  double prefix(std::size_t i) const { return total_weight - tail(i); }
};

struct SubTask {
  RectRegion rect;                  // normalized coordinates of this frame
  std::vector<std::size_t> locals;  // indices into Ctx::radius, ascending
  Regime regime = Regime::main_theorem;
  double sigma = 0.0;               // normalized units of this frame
};

struct RoutineResult {
  std::vector<std::pair<std::size_t, Point>> placed;
  std::vector<SubTask> subtasks;
};

using RoutineFn = std::optional<RoutineResult> (*)(const Ctx&);

struct RoutineEntry {
  const char* id;
  RoutineFn fn;
};

std::span<const RoutineEntry> main_routine_table();
std::span<const RoutineEntry> sb_routine_table();
std::span<const RoutineEntry> sized_routine_table();

// ---- Ternary gates over degenerate intervals -------------------------------

inline Interval iv(double v) { return Interval(v); }

inline bool def_le(const Interval& a, const Interval& b) {
  return compare_le(a, b) == Ternary::definitely_true;
}
inline bool def_ge(const Interval& a, const Interval& b) {
  return def_le(b, a);
}
inline bool def_lt(const Interval& a, const Interval& b) {
  return compare_lt(a, b) == Ternary::definitely_true;
}

// ---- Chord geometry --------------------------------------------------------

// Cross extent of the maximal rectangle of given span inscribed in a radius-r
// disk: 2 sqrt(r^2 - span^2/4); <= 0 means infeasible.
inline double chord(double r, double span) {
  const double t = r * r - 0.25 * span * span;
  return t <= 0.0 ? 0.0 : 2.0 * std::sqrt(t);
}

Interval chord_bounds(const Interval& r_sq, const Interval& span);

// Largest cross extent t such that the chords of all disks at t sum to at
// least `span`; nullopt when even t=0 fails. Both the row and the stacked
// column questions reduce to this by symmetry.
std::optional<double> max_covered_cross(double span,
                                        std::span<const double> radii);

// Definitely-achievable variant for interval radii (used by prover criteria):
// the returned t satisfies sum_i chord(r_i, t) >= span for every point of the
// boxes. nullopt when not even t=0 is definite.
std::optional<double> max_covered_cross_definite(
    const Interval& span, std::span<const Interval> radius_sq);

// ---- Recursion admission ----------------------------------------------------

struct RecursePlan {
  RectRegion rect;  // possibly widened (always contains the requested rect)
  Regime regime = Regime::main_theorem;
  double sigma = 0.0;  // in the *current frame's* units, for size_bounded
  bool nothing_to_do = false;  // rect negligible, no subtask needed
};

// Decides whether recursion on `rect` with total weight `weight` and largest
// radius `r_max` is guaranteed by one of the covering lemmas, trying in order:
// negligible rect, single-disk circumcircle, the main theorem, the
// weight-bounded lemma, the size-bounded lemma, and the weight-bounded lemma
// after widening the shorter side to fit the radius bound. All checks are
// evaluated in degenerate-interval arithmetic and accepted only when
// definitely true.
std::optional<RecursePlan> can_recurse(const RectRegion& rect, double weight,
                                       double r_max);

// Appends a subtask for `plan` (unless there is nothing to do). `locals` may
// be empty only when the plan says nothing_to_do.
void push_plan(RoutineResult& out, const RecursePlan& plan,
               std::vector<std::size_t> locals);

// Collects locals[start..] in order (prefix by prefix) until recursion on
// `rect` is admitted, preferring the shortest prefix whose plan also leaves a
// workable remainder per `rest_ok`. Returns the committed prefix length m
// (locals start..start+m-1 collected) and the plan.
struct Collected {
  std::size_t count = 0;
  RecursePlan plan;
};
std::optional<Collected> collect_prefix_for(const Ctx& c,
                                            const RectRegion& rect,
                                            std::size_t start);

// ---- Placement emission -----------------------------------------------------

// Places `locals` stacked along y, covering [x0, x0+width] x [y0, y0+span]
// exactly; each disk's sub-rectangle is scaled from its chord at `width`, so
// sub-rectangles are strictly inside their disks whenever the chords sum to
// more than span. Returns false (emitting nothing) if the chords do not
// definitely suffice or any containment gate fails.
bool emit_stack_y(const Ctx& c, RoutineResult& out,
                  std::span<const std::size_t> locals, double x0, double y0,
                  double width, double span);
// Same along x: covers [x0, x0+span] x [y0, y0+height].
bool emit_stack_x(const Ctx& c, RoutineResult& out,
                  std::span<const std::size_t> locals, double x0, double y0,
                  double height, double span);

// Places one disk centered on `rect`; false if containment is not definite.
bool emit_cover_rect(const Ctx& c, RoutineResult& out, std::size_t local,
                     const RectRegion& rect);

// ---- Misc -------------------------------------------------------------------

// Upper intersection point of two circles, when it exists transversally.
std::optional<Point> upper_circle_intersection(Point c1, double r1, Point c2,
                                               double r2);

// Weight of a local index set.
double weight_of(const Ctx& c, std::span<const std::size_t> locals);

// Ascending index vector [first, last).
std::vector<std::size_t> index_range(std::size_t first, std::size_t last);

// Complement of `used` (must be sorted ascending) within [0, n).
std::vector<std::size_t> complement_of(std::span<const std::size_t> used,
                                       std::size_t n);

// Internal wall builder used by the routines: covers [0, width] x [0, ell]
// with `locals`, consuming a prefix; mirrors wall_build but respects the
// context's placement shrink and emits directly.
struct WallOutcome {
  double width = 0.0;
  std::size_t used = 0;  // prefix length of locals consumed
  double used_weight = 0.0;
};
std::optional<WallOutcome> emit_wall_column(const Ctx& c, RoutineResult& out,
                                            std::span<const std::size_t> locals,
                                            double x0, double y0, double ell,
                                            bool vertical);

}  // namespace critcover::detail

#endif  // CRITCOVER_SOLVER_INTERNAL_HPP
