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
#ifndef CRITCOVER_SOLVER_HPP
#define CRITCOVER_SOLVER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "critcover/geometry.hpp"

namespace critcover {

/// Which covering guarantee a task runs under.
///  - main_theorem:      W(D) >= W*(skew) after normalizing to shorter side 1.
///  - weight_bounded_sb: r1 <= 0.375*min(w,h) and W(D) >= 0.61*|region|.
///  - size_bounded:      every disk weight <= sigma and W(D) >= E(sigma')*|region|
///                       with sigma' the normalized bound (>= sigma_hat).
enum class Regime { main_theorem, size_bounded, weight_bounded_sb };

struct CoverTask {
  RectRegion region;
  DiskSet disks;
  Regime regime = Regime::main_theorem;
  /// Upper bound on disk weight, world units; used by size_bounded only.
  double sigma = 0.0;
  int depth = 0;
};

struct SolveOptions {
  /// Free placement dimensions are reduced by this much so every accepted
  /// placement has strictly positive containment margins and the verifier
  /// terminates without slack. solve() retries with 1e-10 and then 0 before
  /// giving up, so exactly-tight inputs still resolve (their placements are
  /// then only certifiable by the slack-verifying test path).
  double placement_shrink = 1e-8;
  /// Recursion tripwire; the routine cascade strictly shrinks weight or area,
  /// so hitting this indicates a bug.
  int max_depth = 10000;
  /// When non-empty, the root dispatch must use this routine (no fallback at
  /// the root). Used by prover soundness sampling.
  std::string forced_first_routine;
};

/// Raised when no routine's success criterion holds, which for valid inputs
/// indicates an implementation bug, never a property of the input. Carries a
/// diagnostic dump of (skew, largest radii, remaining weight).
class SolverExhausted : public std::runtime_error {
 public:
  explicit SolverExhausted(const std::string& diagnostic)
      : std::runtime_error(diagnostic) {}
};

/// Produces a placement covering task.region with task.disks by trying the
/// routine cascade of the task's regime in fixed order; recursion re-dispatches
/// among the three regimes. No backtracking: the first routine whose success
/// criterion is definitely true (evaluated in degenerate-interval arithmetic)
/// is committed.
Placement solve(const CoverTask& task);
Placement solve(const CoverTask& task, const SolveOptions& options);

/// Routine identifiers of a regime's cascade, in dispatch order.
std::vector<std::string> routine_catalog(Regime regime);

/// The two extremal disk families.
///  - two_disk:    weights {(lambda^2+1)/4, 1/4}
///  - three_equal: three disks of weight lambda^2/16 + 5/32 + 9/(256 lambda^2)
enum class WorstCaseFamily { two_disk, three_equal };

DiskSet worst_case_instances(double lambda, WorstCaseFamily family);

/// The decision rule: a disk collection covers a lambda x 1 rectangle for
/// sure iff its total weight reaches the critical weight W*(lambda).
bool is_coverable(double lambda, const DiskSet& disks);

/// The tight constructive placements for the worst-case families, in exact
/// closed-form coordinates (no placement shrink); their margins are
/// measure-zero, so verify them with the slack policy.
Placement worst_case_placement(double lambda, WorstCaseFamily family);

/// Height of the rectangle covered by the second disk in the three-equal
/// construction; equals 1/2 exactly in real arithmetic, for every lambda.
double three_equal_covered_height(double lambda);

/// Covers an ell x b strip (b chosen by the procedure, 0 < b <= sqrt(2) q1)
/// by stacking the given disks, using total weight at most E*ell*b. The disks
/// must satisfy the wall-building conditions:
///  (1) q1 <= (ell/sqrt(2)) (1 - 1/sqrt(1+sqrt(1-1/(4E^2))))
///  (2) q_m >= q1 * sqrt(4E^2 - 2E sqrt(4E^2-1))
///  (3) sum q_i^2 >= sqrt(2) q1 E L(ell)
/// Throws std::invalid_argument when they do not hold.
struct WallColumn {
  double width = 0.0;                ///< b
  double used_weight = 0.0;          ///< sum of weights actually stacked
  std::size_t disks_used = 0;        ///< prefix length of the input sequence
  /// Sub-rectangles covered by each used disk, bottom to top, all of width b;
  /// together they tile [0,b] x [0,ell].
  std::vector<RectRegion> rows;
};
WallColumn wall_build(const std::vector<double>& radii, double ell, double e);

}  // namespace critcover

#endif  // CRITCOVER_SOLVER_HPP
