// Copyright 2026 The HQNAS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <limits>
#include <span>
#include <vector>

namespace hqnas::moo {

/**
 * @brief Bi-objective value, both components minimized.
 *
 * For the architecture search o1 = 1 - test accuracy and o2 = total FLOPs.
 */
struct Objectives {
    double o1 = 0.0;
    double o2 = 0.0;
};

/// Strict Pareto dominance: a <= b component-wise and a < b in at least one.
bool dominates(const Objectives &a, const Objectives &b);

/**
 * @brief Fast non-dominated sorting.
 *
 * Front 0 is the non-dominated set; front k is non-dominated once fronts
 * < k are removed. Returns index lists; every input appears exactly once.
 */
std::vector<std::vector<int>> nondominated_sort(std::span<const Objectives> points);

/**
 * @brief NSGA-II crowding distance for the members of one front.
 *
 * Per objective the extremes get +inf and interior members the normalized
 * neighbor gap; distances sum over objectives. A zero objective range
 * contributes 0 to interior members. Returned in front order.
 */
std::vector<double> crowding_distance(std::span<const Objectives> points,
                                      std::span<const int> front);

/**
 * @brief Area dominated between a point set and the reference (minimization).
 *
 * Dominated or duplicate points are ignored. Throws std::invalid_argument if
 * any point lies outside the reference box.
 */
double hypervolume_2d(std::span<const Objectives> points, const Objectives &reference);

/// Indices of the non-dominated subset, in input order. Duplicates all survive.
std::vector<int> pareto_filter(std::span<const Objectives> points);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

} // namespace hqnas::moo
