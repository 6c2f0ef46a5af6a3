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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hqnas/moo.hpp"
#include "hqnas/rng.hpp"

namespace hqnas::moo {

struct SearchConfig {
    int population_size = 40;
    int max_generations = 50;
    double p_crossover = 0.8; // probability a mated pair is recombined
    double p_mutation = 0.2;  // per-offspring probability of one-gene resample
    int stall_generations = 2;
    double hv_epsilon = 1e-4;
    std::uint64_t seed = 0;
    int jobs = 1;                 // evaluation fan-out width
    Objectives hv_reference{1.0, 1.0}; // reference point for the stop rule
};

template <typename G> struct ArchiveEntry {
    G genotype;
    std::string key;
    Objectives objectives;
    int generation = 0; // generation of first evaluation
};

struct GenerationStats {
    int generation = 0;
    std::size_t evaluations = 0; // distinct candidates evaluated so far
    int front_size = 0;          // size of the global-archive Pareto set
    double hypervolume = 0.0;    // of the global archive
    double best_o1 = 0.0;
    double min_o2_at_best_o1 = 0.0;
};

template <typename G> struct Nsga2Result {
    std::vector<ArchiveEntry<G>> archive; // insertion order, unique keys
    std::vector<GenerationStats> stats;   // one row per generation, 0-based
    int generations_run = 0;              // evolved generations (excludes gen 0)
    bool stopped_by_stall = false;
};

/**
 * @brief Elitist NSGA-II over a user-supplied problem.
 *
 * The Problem type provides:
 *   using Geno = ...;
 *   Geno random_genotype(Rng&);
 *   Geno mutate(const Geno&, Rng&);
 *   std::pair<Geno, Geno> crossover(const Geno&, const Geno&, Rng&);
 *   std::string key(const Geno&) const;           // canonical identity
 *   Objectives evaluate(const Geno&, int generation);  // thread-safe
 *   std::size_t num_evaluations() const;
 *
 * Selection and variation run on the calling thread from a single seeded
 * stream; offspring evaluation fans out over config.jobs OpenMP threads with
 * results committed in offspring order, so the outcome is independent of
 * scheduling. Stops once the relative hypervolume gain of the global archive
 * stays below hv_epsilon for stall_generations consecutive generations, or at
 * max_generations.
 */
template <typename Problem>
Nsga2Result<typename Problem::Geno> nsga2_run(Problem &problem, const SearchConfig &config);

// --- implementation ---

namespace detail {

struct RankedIndex {
    int rank = 0;
    double crowding = 0.0;
};

/// Ranks and crowding distances for a whole population.
inline std::vector<RankedIndex> rank_population(std::span<const Objectives> objectives) {
    std::vector<RankedIndex> ranked(objectives.size());
    const auto fronts = nondominated_sort(objectives);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        const std::vector<double> crowd = crowding_distance(objectives, fronts[f]);
        for (std::size_t i = 0; i < fronts[f].size(); ++i) {
            ranked[static_cast<std::size_t>(fronts[f][i])] = {static_cast<int>(f), crowd[i]};
        }
    }
    return ranked;
}

/// Crowded-comparison: lower rank wins, then larger crowding distance.
inline bool crowded_better(const RankedIndex &a, const RankedIndex &b) {
    return a.rank < b.rank || (a.rank == b.rank && a.crowding > b.crowding);
}

} // namespace detail

template <typename Problem>
Nsga2Result<typename Problem::Geno> nsga2_run(Problem &problem, const SearchConfig &config) {
    using G = typename Problem::Geno;
    const int pop_size = config.population_size;
    Rng rng(config.seed);

    Nsga2Result<G> result;
    std::unordered_set<std::string> archived_keys;

    auto evaluate_batch = [&](const std::vector<G> &batch, int generation) {
        std::vector<Objectives> objs(batch.size());
        const int count = static_cast<int>(batch.size());
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs) if (config.jobs > 1)
        for (int i = 0; i < count; ++i) {
            try {
                objs[static_cast<std::size_t>(i)] =
                    problem.evaluate(batch[static_cast<std::size_t>(i)], generation);
            } catch (...) {
                // Exceptions must not unwind across the parallel region.
#pragma omp critical(hqnas_nsga2_error)
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }
        // Archive commits happen in offspring order regardless of schedule.
        for (int i = 0; i < count; ++i) {
            std::string key = problem.key(batch[static_cast<std::size_t>(i)]);
            if (archived_keys.insert(key).second) {
                result.archive.push_back({batch[static_cast<std::size_t>(i)], std::move(key),
                                          objs[static_cast<std::size_t>(i)], generation});
            }
        }
        return objs;
    };

    auto record_stats = [&](int generation) {
        std::vector<Objectives> archive_objs;
        archive_objs.reserve(result.archive.size());
        for (const auto &entry : result.archive) {
            archive_objs.push_back(entry.objectives);
        }
        GenerationStats stats;
        stats.generation = generation;
        stats.evaluations = problem.num_evaluations();
        stats.front_size = static_cast<int>(pareto_filter(archive_objs).size());
        stats.hypervolume = hypervolume_2d(archive_objs, config.hv_reference);
        stats.best_o1 = kInfinity;
        for (const Objectives &o : archive_objs) {
            if (o.o1 < stats.best_o1 ||
                (o.o1 == stats.best_o1 && o.o2 < stats.min_o2_at_best_o1)) {
                stats.best_o1 = o.o1;
                stats.min_o2_at_best_o1 = o.o2;
            }
        }
        result.stats.push_back(stats);
        return stats.hypervolume;
    };

    // Generation 0: random initial population.
    std::vector<G> population;
    population.reserve(static_cast<std::size_t>(pop_size));
    for (int i = 0; i < pop_size; ++i) {
        population.push_back(problem.random_genotype(rng));
    }
    std::vector<Objectives> pop_objs = evaluate_batch(population, 0);
    double prev_hv = record_stats(0);

    int stall = 0;
    for (int generation = 1; generation <= config.max_generations; ++generation) {
        const auto ranked = detail::rank_population(pop_objs);

        auto tournament = [&]() -> int {
            const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(pop_size)));
            int b = a;
            while (pop_size > 1 && b == a) {
                b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(pop_size)));
            }
            return detail::crowded_better(ranked[static_cast<std::size_t>(b)],
                                          ranked[static_cast<std::size_t>(a)])
                       ? b
                       : a;
        };

        std::vector<G> offspring;
        offspring.reserve(static_cast<std::size_t>(pop_size));
        while (static_cast<int>(offspring.size()) < pop_size) {
            const G &p1 = population[static_cast<std::size_t>(tournament())];
            const G &p2 = population[static_cast<std::size_t>(tournament())];
            auto [c1, c2] = rng.next_double() < config.p_crossover
                                ? problem.crossover(p1, p2, rng)
                                : std::make_pair(p1, p2);
            if (rng.next_double() < config.p_mutation) {
                c1 = problem.mutate(c1, rng);
            }
            if (rng.next_double() < config.p_mutation) {
                c2 = problem.mutate(c2, rng);
            }
            offspring.push_back(std::move(c1));
            if (static_cast<int>(offspring.size()) < pop_size) {
                offspring.push_back(std::move(c2));
            }
        }
        const std::vector<Objectives> off_objs = evaluate_batch(offspring, generation);

        // Elitist environmental selection from parents + offspring.
        std::vector<G> combined = population;
        combined.insert(combined.end(), offspring.begin(), offspring.end());
        std::vector<Objectives> combined_objs = pop_objs;
        combined_objs.insert(combined_objs.end(), off_objs.begin(), off_objs.end());

        const auto fronts = nondominated_sort(combined_objs);
        std::vector<G> next_population;
        std::vector<Objectives> next_objs;
        next_population.reserve(static_cast<std::size_t>(pop_size));
        next_objs.reserve(static_cast<std::size_t>(pop_size));
        for (const auto &front : fronts) {
            if (static_cast<int>(next_population.size()) >= pop_size) {
                break;
            }
            std::vector<int> members = front;
            if (static_cast<int>(next_population.size() + members.size()) > pop_size) {
                // Truncate the spill-over front by descending crowding
                // distance; stable w.r.t. index order for equal distances.
                const std::vector<double> crowd = crowding_distance(combined_objs, members);
                std::vector<std::size_t> order(members.size());
                for (std::size_t i = 0; i < order.size(); ++i) {
                    order[i] = i;
                }
                std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                    return crowd[a] > crowd[b];
                });
                std::vector<int> truncated;
                const std::size_t need =
                    static_cast<std::size_t>(pop_size) - next_population.size();
                for (std::size_t i = 0; i < need; ++i) {
                    truncated.push_back(members[order[i]]);
                }
                members = std::move(truncated);
            }
            for (const int idx : members) {
                next_population.push_back(combined[static_cast<std::size_t>(idx)]);
                next_objs.push_back(combined_objs[static_cast<std::size_t>(idx)]);
            }
        }
        population = std::move(next_population);
        pop_objs = std::move(next_objs);
        result.generations_run = generation;

        const double hv = record_stats(generation);
        const double gain =
            prev_hv > 0.0 ? (hv - prev_hv) / prev_hv : (hv > 0.0 ? kInfinity : 0.0);
        stall = gain < config.hv_epsilon ? stall + 1 : 0;
        prev_hv = hv;
        if (stall >= config.stall_generations) {
            result.stopped_by_stall = true;
            break;
        }
    }
    return result;
}

} // namespace hqnas::moo
