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
#ifndef CRITCOVER_INTERVAL_HPP
#define CRITCOVER_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace critcover {

/// Three-valued truth for comparisons of intervals. A comparison is
/// definitely_true when it holds for every pair of points drawn from the
/// operands, definitely_false when it holds for none, and indeterminate
/// otherwise (including any comparison involving an invalid interval).
enum class Ternary { definitely_false, indeterminate, definitely_true };

constexpr bool possibly_true(Ternary t) {
  return t != Ternary::definitely_false;
}
constexpr bool possibly_false(Ternary t) {
  return t != Ternary::definitely_true;
}
constexpr bool definitely(Ternary t) { return t == Ternary::definitely_true; }

/// Three-valued conjunction/disjunction/negation with the usual Kleene
/// semantics (false < indeterminate < true).
constexpr Ternary t_and(Ternary a, Ternary b) { return a < b ? a : b; }
constexpr Ternary t_or(Ternary a, Ternary b) { return a < b ? b : a; }
constexpr Ternary t_not(Ternary a) {
  switch (a) {
    case Ternary::definitely_false: return Ternary::definitely_true;
    case Ternary::definitely_true: return Ternary::definitely_false;
    default: return Ternary::indeterminate;
  }
}

/// How outward rounding of interval endpoints is realized. Both engines
/// satisfy the same containment contract and both are exercised by the
/// soundness fuzz suite; the engine is a thread-local setting so rounding-mode
/// changes made by the hardware engine can never leak across concurrent
/// workers. Everything outside this module goes through the same seam.
enum class RoundingEngine {
  step_outward,  ///< round-to-nearest op, then one representable step outward
  hardware       ///< fesetround(FE_DOWNWARD/FE_UPWARD) around each operation
};

RoundingEngine rounding_engine() noexcept;
void set_rounding_engine(RoundingEngine engine) noexcept;

/// A closed real interval [lo, hi] with outward-rounded endpoints.
///
/// Invariants: lo <= hi and both endpoints finite, or the interval is
/// invalid. Invalid intervals are sticky: any operation involving one yields
/// an invalid interval, and every predicate over one evaluates to
/// indeterminate. Domain violations (zero in a divisor, negative values under
/// a square root) and overflow to non-finite endpoints also produce invalid
/// intervals, so a prover built on top of this type fails conservatively
/// instead of crashing or lying.
class Interval {
 public:
  /// Default-constructed intervals are invalid, not zero.
  Interval() noexcept : lo_(nan_()), hi_(nan_()) {}
  /// Degenerate interval [v, v]; invalid if v is not finite.
  explicit Interval(double v) noexcept : Interval(v, v) {}
  Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      lo_ = hi_ = nan_();
    }
  }

  static Interval invalid() noexcept { return Interval(); }
  /// Smallest interval containing both arguments, in either order.
  static Interval hull_of(double a, double b) noexcept {
    return a <= b ? Interval(a, b) : Interval(b, a);
  }

  bool valid() const noexcept { return lo_ == lo_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double mid() const noexcept { return 0.5 * (lo_ + hi_); }
  double width() const noexcept { return hi_ - lo_; }
  bool contains(double v) const noexcept {
    return valid() && lo_ <= v && v <= hi_;
  }
  bool contains(const Interval& o) const noexcept {
    return valid() && o.valid() && lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  bool is_degenerate() const noexcept { return valid() && lo_ == hi_; }

  std::string str() const;

 private:
  static double nan_() noexcept {
    return std::numeric_limits<double>::quiet_NaN();
  }
  double lo_, hi_;
};

// Total arithmetic: never throws, domain violations yield invalid intervals.
Interval operator+(const Interval& a, const Interval& b) noexcept;
Interval operator-(const Interval& a, const Interval& b) noexcept;
Interval operator*(const Interval& a, const Interval& b) noexcept;
Interval operator/(const Interval& a, const Interval& b) noexcept;
Interval operator-(const Interval& a) noexcept;

/// Enclosure of sqrt over the interval; invalid if a.lo() < 0.
Interval sqrt(const Interval& a) noexcept;
/// Enclosure of x^2; tighter than a*a for intervals straddling zero.
Interval square(const Interval& a) noexcept;

/// Componentwise min/max hulls:
/// min([a,b],[c,d]) = [min(a,c), min(b,d)], max analogously.
Interval min(const Interval& a, const Interval& b) noexcept;
Interval max(const Interval& a, const Interval& b) noexcept;
/// Smallest interval containing both operands.
Interval hull(const Interval& a, const Interval& b) noexcept;
/// Intersection; invalid if the operands are disjoint.
Interval intersect(const Interval& a, const Interval& b) noexcept;

/// Ternary comparison a <= b: definitely_true iff a.hi <= b.lo,
/// definitely_false iff a.lo > b.hi, indeterminate otherwise or if either
/// operand is invalid.
Ternary compare_le(const Interval& a, const Interval& b) noexcept;
/// Ternary comparison a < b (strict).
Ternary compare_lt(const Interval& a, const Interval& b) noexcept;

enum class IaOp { add, sub, mul, div };

/// Checked spec-level entry points: same arithmetic as the operators but
/// precondition violations throw std::domain_error instead of returning an
/// invalid interval.
Interval ia_binary(IaOp op, const Interval& a, const Interval& b);
Interval ia_sqrt(const Interval& a);
/// Componentwise (min, max) pair.
std::pair<Interval, Interval> ia_minmax(const Interval& a, const Interval& b);

}  // namespace critcover

#endif  // CRITCOVER_INTERVAL_HPP
