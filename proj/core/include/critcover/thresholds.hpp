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
#ifndef CRITCOVER_THRESHOLDS_HPP
#define CRITCOVER_THRESHOLDS_HPP

#include "critcover/interval.hpp"

namespace critcover {

/// Critical constants of the covering characterization. Every constant is
/// evaluated once from its defining expression (never transcribed as a long
/// decimal), except for the two literal coefficients 0.61 and 0.375 of the
/// weight-bounded regime, which are exact by definition.
struct CriticalConstants {
  double lambda2;       ///< sqrt(sqrt(7)/2 - 1/4), branch switch of W*
  double lambda_bar;    ///< (195 + sqrt(5257)) / 128
  double sigma_hat;     ///< 195*sqrt(5257) / 16384
  double e_sb;          ///< 0.61, weight-bounded covering coefficient
  double r_bound_sb;    ///< 0.375, weight-bounded radius bound
  double r_bar;         ///< sqrt(195*lambda_bar/128 - 11/4), split-cover cutoff
};

const CriticalConstants& constants();

/// Interval enclosures of the same constants, for the prover.
struct CriticalConstantBounds {
  Interval lambda2;
  Interval lambda_bar;
  Interval sigma_hat;
  Interval e_sb;
  Interval r_bound_sb;
  Interval r_bar;
};

const CriticalConstantBounds& constant_bounds();

/// Critical covering weight W*(lambda): the least total disk weight such that
/// every disk collection of at least that weight covers a lambda x 1
/// rectangle. Two branches meeting continuously at lambda2:
///   3(lambda^2/16 + 5/32 + 9/(256 lambda^2))   for lambda <  lambda2
///   (lambda^2 + 2)/4                           otherwise.
/// Throws std::invalid_argument for lambda < 1.
double critical_weight(double lambda);
/// pi * W*(lambda).
double critical_area(double lambda);
/// E*(lambda) = W*(lambda)/lambda, the per-unit-area weight requirement.
double critical_coefficient(double lambda);

/// E(sigma) = (1/2) sqrt(sqrt(sigma^2+1)+1) for sigma >= sigma_hat: the
/// covering coefficient achievable when every disk weight is at most sigma.
double size_bounded_coefficient(double sigma);
/// Lambda(E) = 2E + sqrt(4E^2-2): the unique skew >= lambda_bar with
/// E*(Lambda(E)) = E, for E >= 195/256.
double lambda_of_coefficient(double e);
/// sigma(E) = E*(Lambda(E) - 2/Lambda(E)), inverse of E(sigma).
double sigma_of_coefficient(double e);

/// Constants of the wall-building machinery for covering coefficient E > 1/2:
///   s               = sqrt(4E^2 - 2E sqrt(4E^2-1)),   radius decay floor
///   l_factor        = 1/sqrt(1 + sqrt(1 - 1/(4E^2))), L(l) = l * l_factor
///   q1_bound_factor = (1 - l_factor)/sqrt(2),         largest-disk bound
struct WallConstants {
  double s;
  double l_factor;
  double q1_bound_factor;
};
WallConstants wall_building_constants(double e);

// Interval twins. Inputs are clipped against the domain; a lambda interval
// straddling lambda2 is evaluated on both branches and hulled, so the result
// encloses the image of every point of the input.
Interval critical_weight_bounds(const Interval& lambda) noexcept;
Interval critical_coefficient_bounds(const Interval& lambda) noexcept;
Interval size_bounded_coefficient_bounds(const Interval& sigma) noexcept;
Interval lambda_of_coefficient_bounds(const Interval& e) noexcept;

struct WallConstantBounds {
  Interval s;
  Interval l_factor;
  Interval q1_bound_factor;
};
WallConstantBounds wall_building_constant_bounds(const Interval& e) noexcept;

}  // namespace critcover

#endif  // CRITCOVER_THRESHOLDS_HPP
