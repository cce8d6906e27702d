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
#include "critcover/interval.hpp"

#include <bit>
#include <cfenv>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace critcover {

namespace {

thread_local RoundingEngine g_engine = RoundingEngine::step_outward;

// One representable value toward -inf. +inf maps to DBL_MAX, which is a sound
// lower endpoint after an overflowing round-to-nearest; -inf stays -inf and is
// flagged invalid by the Interval constructor.
double step_down(double x) noexcept {
  if (x != x) return x;
  if (x == std::numeric_limits<double>::infinity()) {
    return std::numeric_limits<double>::max();
  }
  if (x == -std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits += (x > 0.0) ? -1 : +1;
  return std::bit_cast<double>(bits);
}

double step_up(double x) noexcept {
  if (x != x) return x;
  if (x == -std::numeric_limits<double>::infinity()) {
    return std::numeric_limits<double>::lowest();
  }
  if (x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits += (x > 0.0) ? +1 : -1;
  return std::bit_cast<double>(bits);
}

enum class Dir { down, up };

// The volatile operands keep the compiler from constant-folding or hoisting
// the operation across the fesetround calls.
template <typename F>
double with_mode(int mode, F&& f) noexcept {
  std::fesetround(mode);
  double r = f();
  std::fesetround(FE_TONEAREST);
  return r;
}

double add_dir(double a, double b, Dir d) noexcept {
  if (g_engine == RoundingEngine::hardware) {
    volatile double va = a, vb = b;
    return with_mode(d == Dir::down ? FE_DOWNWARD : FE_UPWARD,
                     [&]() -> double { return va + vb; });
  }
  double r = a + b;
  return d == Dir::down ? step_down(r) : step_up(r);
}

double sub_dir(double a, double b, Dir d) noexcept {
  if (g_engine == RoundingEngine::hardware) {
    volatile double va = a, vb = b;
    return with_mode(d == Dir::down ? FE_DOWNWARD : FE_UPWARD,
                     [&]() -> double { return va - vb; });
  }
  double r = a - b;
  return d == Dir::down ? step_down(r) : step_up(r);
}

double mul_dir(double a, double b, Dir d) noexcept {
  if (g_engine == RoundingEngine::hardware) {
    volatile double va = a, vb = b;
    return with_mode(d == Dir::down ? FE_DOWNWARD : FE_UPWARD,
                     [&]() -> double { return va * vb; });
  }
  double r = a * b;
  return d == Dir::down ? step_down(r) : step_up(r);
}

double div_dir(double a, double b, Dir d) noexcept {
  if (g_engine == RoundingEngine::hardware) {
    volatile double va = a, vb = b;
    return with_mode(d == Dir::down ? FE_DOWNWARD : FE_UPWARD,
                     [&]() -> double { return va / vb; });
  }
  double r = a / b;
  return d == Dir::down ? step_down(r) : step_up(r);
}

double sqrt_dir(double a, Dir d) noexcept {
  if (g_engine == RoundingEngine::hardware) {
    volatile double va = a;
    return with_mode(d == Dir::down ? FE_DOWNWARD : FE_UPWARD,
                     [&]() -> double { return std::sqrt(va); });
  }
  double r = std::sqrt(a);
  return d == Dir::down ? step_down(r) : step_up(r);
}

}  // namespace

RoundingEngine rounding_engine() noexcept { return g_engine; }
void set_rounding_engine(RoundingEngine engine) noexcept { g_engine = engine; }

std::string Interval::str() const {
  if (!valid()) return "[invalid]";
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo_ << ", " << hi_ << "]";
  return os.str();
}

Interval operator+(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  return Interval(add_dir(a.lo(), b.lo(), Dir::down),
                  add_dir(a.hi(), b.hi(), Dir::up));
}

Interval operator-(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  return Interval(sub_dir(a.lo(), b.hi(), Dir::down),
                  sub_dir(a.hi(), b.lo(), Dir::up));
}

Interval operator-(const Interval& a) noexcept {
  if (!a.valid()) return Interval::invalid();
  return Interval(-a.hi(), -a.lo());
}

Interval operator*(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  const double c[4][2] = {{a.lo(), b.lo()},
                          {a.lo(), b.hi()},
                          {a.hi(), b.lo()},
                          {a.hi(), b.hi()}};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& p : c) {
    lo = std::fmin(lo, mul_dir(p[0], p[1], Dir::down));
    hi = std::fmax(hi, mul_dir(p[0], p[1], Dir::up));
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  if (b.lo() <= 0.0 && b.hi() >= 0.0) return Interval::invalid();
  const double c[4][2] = {{a.lo(), b.lo()},
                          {a.lo(), b.hi()},
                          {a.hi(), b.lo()},
                          {a.hi(), b.hi()}};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& p : c) {
    lo = std::fmin(lo, div_dir(p[0], p[1], Dir::down));
    hi = std::fmax(hi, div_dir(p[0], p[1], Dir::up));
  }
  return Interval(lo, hi);
}

Interval sqrt(const Interval& a) noexcept {
  if (!a.valid() || a.lo() < 0.0) return Interval::invalid();
  double lo = sqrt_dir(a.lo(), Dir::down);
  if (lo < 0.0) lo = 0.0;
  return Interval(lo, sqrt_dir(a.hi(), Dir::up));
}

Interval square(const Interval& a) noexcept {
  if (!a.valid()) return Interval::invalid();
  const double m = std::fmax(std::fabs(a.lo()), std::fabs(a.hi()));
  double hi = mul_dir(m, m, Dir::up);
  if (a.lo() <= 0.0 && a.hi() >= 0.0) return Interval(0.0, hi);
  const double n = std::fmin(std::fabs(a.lo()), std::fabs(a.hi()));
  double lo = mul_dir(n, n, Dir::down);
  if (lo < 0.0) lo = 0.0;
  return Interval(lo, hi);
}

Interval min(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  return Interval(std::fmin(a.lo(), b.lo()), std::fmin(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  return Interval(std::fmax(a.lo(), b.lo()), std::fmax(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) noexcept {
  if (!a.valid()) return b;
  if (!b.valid()) return a;
  return Interval(std::fmin(a.lo(), b.lo()), std::fmax(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Interval::invalid();
  double lo = std::fmax(a.lo(), b.lo());
  double hi = std::fmin(a.hi(), b.hi());
  if (lo > hi) return Interval::invalid();
  return Interval(lo, hi);
}

Ternary compare_le(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Ternary::indeterminate;
  if (a.hi() <= b.lo()) return Ternary::definitely_true;
  if (a.lo() > b.hi()) return Ternary::definitely_false;
  return Ternary::indeterminate;
}

Ternary compare_lt(const Interval& a, const Interval& b) noexcept {
  if (!a.valid() || !b.valid()) return Ternary::indeterminate;
  if (a.hi() < b.lo()) return Ternary::definitely_true;
  if (a.lo() >= b.hi()) return Ternary::definitely_false;
  return Ternary::indeterminate;
}

Interval ia_binary(IaOp op, const Interval& a, const Interval& b) {
  if (!a.valid() || !b.valid()) {
    throw std::domain_error("ia_binary: invalid operand interval");
  }
  switch (op) {
    case IaOp::add: return a + b;
    case IaOp::sub: return a - b;
    case IaOp::mul: return a * b;
    case IaOp::div:
      if (b.lo() <= 0.0 && b.hi() >= 0.0) {
        throw std::domain_error("ia_binary: divisor interval contains zero");
      }
      return a / b;
  }
  throw std::domain_error("ia_binary: unknown operation");
}

Interval ia_sqrt(const Interval& a) {
  if (!a.valid()) throw std::domain_error("ia_sqrt: invalid operand");
  if (a.lo() < 0.0) {
    throw std::domain_error("ia_sqrt: negative lower endpoint");
  }
  return sqrt(a);
}

std::pair<Interval, Interval> ia_minmax(const Interval& a, const Interval& b) {
  return {min(a, b), max(a, b)};
}

}  // namespace critcover
