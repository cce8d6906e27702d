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
#include "critcover/thresholds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace critcover {

namespace {

// Weight of the small-branch worst case, 3(l^2/16 + 5/32 + 9/(256 l^2)).
double small_branch(double lambda) {
  const double l2 = lambda * lambda;
  return 3.0 * (l2 / 16.0 + 5.0 / 32.0 + 9.0 / (256.0 * l2));
}

double large_branch(double lambda) { return (lambda * lambda + 2.0) / 4.0; }

Interval small_branch_bounds(const Interval& lambda) noexcept {
  const Interval l2 = square(lambda);
  return Interval(3.0) * (l2 / Interval(16.0) +
                          Interval(5.0) / Interval(32.0) +
                          Interval(9.0) / (Interval(256.0) * l2));
}

Interval large_branch_bounds(const Interval& lambda) noexcept {
  return (square(lambda) + Interval(2.0)) / Interval(4.0);
}

}  // namespace

const CriticalConstants& constants() {
  static const CriticalConstants c = [] {
    CriticalConstants k{};
    k.lambda2 = std::sqrt(std::sqrt(7.0) / 2.0 - 0.25);
    k.lambda_bar = (195.0 + std::sqrt(5257.0)) / 128.0;
    k.sigma_hat = 195.0 * std::sqrt(5257.0) / 16384.0;
    k.e_sb = 0.61;
    k.r_bound_sb = 0.375;
    k.r_bar = std::sqrt(195.0 * k.lambda_bar / 128.0 - 11.0 / 4.0);
    return k;
  }();
  return c;
}

const CriticalConstantBounds& constant_bounds() {
  static const CriticalConstantBounds c = [] {
    CriticalConstantBounds k;
    const Interval seven(7.0), two(2.0), quarter(0.25);
    k.lambda2 = critcover::sqrt(critcover::sqrt(seven) / two - quarter);
    const Interval s5257 = critcover::sqrt(Interval(5257.0));
    k.lambda_bar = (Interval(195.0) + s5257) / Interval(128.0);
    k.sigma_hat = Interval(195.0) * s5257 / Interval(16384.0);
    k.e_sb = Interval(0.61);
    k.r_bound_sb = Interval(0.375);
    k.r_bar = critcover::sqrt(Interval(195.0) * k.lambda_bar / Interval(128.0) -
                              Interval(11.0) / Interval(4.0));
    return k;
  }();
  return c;
}

double critical_weight(double lambda) {
  if (!(lambda >= 1.0)) {
    throw std::invalid_argument("critical_weight: lambda must be >= 1");
  }
  return lambda < constants().lambda2 ? small_branch(lambda)
                                      : large_branch(lambda);
}

double critical_area(double lambda) {
  return std::numbers::pi * critical_weight(lambda);
}

double critical_coefficient(double lambda) {
  return critical_weight(lambda) / lambda;
}

double size_bounded_coefficient(double sigma) {
  // The formula is only a valid covering coefficient from sigma_hat upward;
  // allow a hair of slack for round-tripping through sigma_of_coefficient.
  if (!(sigma >= constants().sigma_hat - 1e-9)) {
    throw std::invalid_argument(
        "size_bounded_coefficient: sigma below sigma_hat");
  }
  return 0.5 * std::sqrt(std::sqrt(sigma * sigma + 1.0) + 1.0);
}

double lambda_of_coefficient(double e) {
  if (!(e >= 195.0 / 256.0 - 1e-12)) {
    throw std::invalid_argument("lambda_of_coefficient: E below 195/256");
  }
  return 2.0 * e + std::sqrt(4.0 * e * e - 2.0);
}

double sigma_of_coefficient(double e) {
  const double big_lambda = lambda_of_coefficient(e);
  return e * (big_lambda - 2.0 / big_lambda);
}

WallConstants wall_building_constants(double e) {
  if (!(e > 0.5)) {
    throw std::invalid_argument("wall_building_constants: E must exceed 1/2");
  }
  WallConstants w{};
  w.s = std::sqrt(4.0 * e * e - 2.0 * e * std::sqrt(4.0 * e * e - 1.0));
  w.l_factor = 1.0 / std::sqrt(1.0 + std::sqrt(1.0 - 1.0 / (4.0 * e * e)));
  w.q1_bound_factor = (1.0 - w.l_factor) / std::sqrt(2.0);
  return w;
}

Interval critical_weight_bounds(const Interval& lambda) noexcept {
  if (!lambda.valid() || lambda.hi() < 1.0) return Interval::invalid();
  const Interval dom = intersect(
      lambda, Interval(1.0, std::numeric_limits<double>::max()));
  const Interval l2 = constant_bounds().lambda2;
  Interval out = Interval::invalid();
  // Evaluate each branch over the part of the domain it can apply to. The
  // overlap around the lambda2 enclosure is evaluated on both branches; they
  // agree there up to enclosure width, and hulling keeps the result an
  // enclosure of the exact image.
  const Interval left = intersect(dom, Interval(1.0, l2.hi()));
  if (left.valid()) out = hull(out, small_branch_bounds(left));
  const Interval right =
      intersect(dom, Interval(l2.lo(), std::numeric_limits<double>::max()));
  if (right.valid()) out = hull(out, large_branch_bounds(right));
  return out;
}

Interval critical_coefficient_bounds(const Interval& lambda) noexcept {
  const Interval w = critical_weight_bounds(lambda);
  if (!w.valid()) return Interval::invalid();
  const Interval dom = intersect(
      lambda, Interval(1.0, std::numeric_limits<double>::max()));
  return w / dom;
}

Interval size_bounded_coefficient_bounds(const Interval& sigma) noexcept {
  if (!sigma.valid()) return Interval::invalid();
  return Interval(0.5) *
         critcover::sqrt(critcover::sqrt(square(sigma) + Interval(1.0)) +
                         Interval(1.0));
}

Interval lambda_of_coefficient_bounds(const Interval& e) noexcept {
  if (!e.valid()) return Interval::invalid();
  return Interval(2.0) * e +
         critcover::sqrt(Interval(4.0) * square(e) - Interval(2.0));
}

WallConstantBounds wall_building_constant_bounds(const Interval& e) noexcept {
  WallConstantBounds w;
  const Interval four_e2 = Interval(4.0) * square(e);
  w.s = critcover::sqrt(four_e2 - Interval(2.0) * e *
                                      critcover::sqrt(four_e2 - Interval(1.0)));
  w.l_factor =
      Interval(1.0) /
      critcover::sqrt(Interval(1.0) +
                      critcover::sqrt(Interval(1.0) - Interval(1.0) / four_e2));
  w.q1_bound_factor =
      (Interval(1.0) - w.l_factor) / critcover::sqrt(Interval(2.0));
  return w;
}

}  // namespace critcover
