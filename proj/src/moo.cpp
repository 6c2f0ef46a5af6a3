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

#include "hqnas/moo.hpp"

#include <algorithm>
#include <stdexcept>

namespace hqnas::moo {

bool dominates(const Objectives &a, const Objectives &b) {
    return a.o1 <= b.o1 && a.o2 <= b.o2 && (a.o1 < b.o1 || a.o2 < b.o2);
}

std::vector<std::vector<int>> nondominated_sort(std::span<const Objectives> points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<int>> dominated_by(static_cast<std::size_t>(n));
    std::vector<int> domination_count(static_cast<std::size_t>(n), 0);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dominates(points[static_cast<std::size_t>(i)],
                          points[static_cast<std::size_t>(j)])) {
                dominated_by[static_cast<std::size_t>(i)].push_back(j);
                ++domination_count[static_cast<std::size_t>(j)];
            } else if (dominates(points[static_cast<std::size_t>(j)],
                                 points[static_cast<std::size_t>(i)])) {
                dominated_by[static_cast<std::size_t>(j)].push_back(i);
                ++domination_count[static_cast<std::size_t>(i)];
            }
        }
    }

    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int i = 0; i < n; ++i) {
        if (domination_count[static_cast<std::size_t>(i)] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<int> next;
        for (const int i : current) {
            for (const int j : dominated_by[static_cast<std::size_t>(i)]) {
                if (--domination_count[static_cast<std::size_t>(j)] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const Objectives> points,
                                      std::span<const int> front) {
    const std::size_t m = front.size();
    if (m == 0) {
        throw std::invalid_argument("crowding_distance of an empty front");
    }
    std::vector<double> distance(m, 0.0);
    if (m <= 2) {
        std::fill(distance.begin(), distance.end(), kInfinity);
        return distance;
    }

    std::vector<std::size_t> order(m);
    for (int objective = 0; objective < 2; ++objective) {
        auto value = [&](std::size_t pos) {
            const Objectives &p = points[static_cast<std::size_t>(front[pos])];
            return objective == 0 ? p.o1 : p.o2;
        };
        for (std::size_t i = 0; i < m; ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return value(a) < value(b); });

        distance[order.front()] = kInfinity;
        distance[order.back()] = kInfinity;
        const double range = value(order.back()) - value(order.front());
        if (range <= 0.0) {
            continue; // degenerate objective contributes nothing to interiors
        }
        for (std::size_t i = 1; i + 1 < m; ++i) {
            distance[order[i]] += (value(order[i + 1]) - value(order[i - 1])) / range;
        }
    }
    return distance;
}

double hypervolume_2d(std::span<const Objectives> points, const Objectives &reference) {
    std::vector<Objectives> front;
    front.reserve(points.size());
    for (const Objectives &p : points) {
        if (p.o1 > reference.o1 || p.o2 > reference.o2) {
            throw std::invalid_argument("hypervolume point outside the reference box");
        }
        front.push_back(p);
    }
    if (front.empty()) {
        return 0.0;
    }
    // Sweep by ascending o1, accumulating one horizontal slab per point that
    // improves o2. Dominated points and duplicates never improve o2 and are
    // skipped.
    std::sort(front.begin(), front.end(), [](const Objectives &a, const Objectives &b) {
        return a.o1 < b.o1 || (a.o1 == b.o1 && a.o2 < b.o2);
    });
    double area = 0.0;
    double best_o2 = reference.o2;
    for (const Objectives &p : front) {
        if (p.o2 >= best_o2) {
            continue;
        }
        area += (reference.o1 - p.o1) * (best_o2 - p.o2);
        best_o2 = p.o2;
    }
    return area;
}

std::vector<int> pareto_filter(std::span<const Objectives> points) {
    std::vector<int> keep;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool is_dominated = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i && dominates(points[j], points[i])) {
                is_dominated = true;
                break;
            }
        }
        if (!is_dominated) {
            keep.push_back(static_cast<int>(i));
        }
    }
    return keep;
}

} // namespace hqnas::moo
