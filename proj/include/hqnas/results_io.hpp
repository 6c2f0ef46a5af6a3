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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hqnas/nsga2.hpp"

namespace hqnas {

/**
 * @brief One evaluated architecture as persisted in results.csv.
 */
struct ResultsRow {
    std::string genotype; // canonical token
    double accuracy = 0.0;
    std::uint64_t classical_flops = 0;
    std::uint64_t quantum_flops = 0;
    std::uint64_t total_flops = 0;
    bool is_pareto = false;
    int generation = 0;
    std::uint64_t seed = 0;
};

inline constexpr const char *kResultsHeader =
    "genotype,accuracy,classical_flops,quantum_flops,total_flops,is_pareto,generation,seed";

/// Formats accuracy the way results.csv stores it (6 decimals).
std::string format_accuracy(double accuracy);

/**
 * @brief Recomputes is_pareto flags in place.
 *
 * Dominance is evaluated on (1 - accuracy, total_flops) after rounding
 * accuracy to its CSV representation, so re-reading the file and re-filtering
 * reproduces the flags exactly.
 */
void assign_pareto_flags(std::vector<ResultsRow> &rows);

/// Non-dominated rows ordered by total_flops ascending (stable).
std::vector<ResultsRow> pareto_rows(std::span<const ResultsRow> rows);

void write_results_csv(const std::string &path, std::span<const ResultsRow> rows);

/// Throws DataError with a row number on malformed input.
std::vector<ResultsRow> read_results_csv(const std::string &path);

void write_generations_csv(const std::string &path, std::span<const moo::GenerationStats> stats);

/// Which FLOPs column a scatter plot uses on its x axis.
enum class FlopsView { kClassical, kQuantum, kTotal };

/**
 * @brief Accuracy-vs-FLOPs scatter as a standalone SVG.
 *
 * 800x600 viewport, log10 FLOPs on x with ticks at integer decades, accuracy
 * on y. Candidates are dots; Pareto members are star markers.
 */
void write_scatter_svg(const std::string &path, std::span<const ResultsRow> rows, FlopsView view);

} // namespace hqnas
