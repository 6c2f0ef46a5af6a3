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
#include <iosfwd>
#include <string>

#include "hqnas/flops.hpp"

namespace hqnas::cli {

/**
 * @brief Effective configuration of one CLI invocation.
 *
 * Values come from defaults, then an optional key = value config file, then
 * command-line overrides. The full effective configuration is echoed into the
 * output directory for provenance.
 */
struct RunConfig {
    std::string dataset_path;
    std::string out_dir = "out";
    std::string genotype_token;
    std::string results_path; // pareto command input

    std::uint64_t seed = 0;
    int population = 40;
    int max_generations = 50;
    double p_crossover = 0.8;
    double p_mutation = 0.2;
    int stall_generations = 2;
    double hv_epsilon = 1e-4;

    int epochs = 30;
    int batch_size = 16;
    double lr = 0.01;
    double test_fraction = 0.2;

    FlopsModel flops_model = FlopsModel::kDense;
    int jobs = 1;

    std::uint64_t limit = UINT64_MAX; // enumerate: clamped to the space size
    std::uint64_t offset = 0;

    int input_dim = 4;   // flops command fallback when no dataset is given
    int num_classes = 3; // flops command fallback
};

/// Parses key = value lines; throws ConfigError on unknown keys or bad values.
void apply_config_file(RunConfig &config, const std::string &path);

FlopsModel parse_flops_model(const std::string &name);

/// Validates fields shared by every command; throws ConfigError.
void validate_common(const RunConfig &config);

// Command implementations. Each returns the process exit code (0 on success)
// and writes human-readable progress to `out`. They throw ConfigError,
// DataError, or EvalError; the binary maps those to exit codes 2, 3, 4.

/// NSGA-II search: writes results.csv, generations.csv, pareto.csv, 3 SVGs.
int run_search(const RunConfig &config, std::ostream &out);

/// Evaluates decode(i) for i in [offset, offset+limit), deduplicated by
/// canonical form; appends to an existing results.csv (same seed only).
int run_enumerate(const RunConfig &config, std::ostream &out);

/// Trains one genotype and prints its results row plus the FLOPs breakdown.
int run_eval(const RunConfig &config, std::ostream &out);

/// Filters a results.csv to its global Pareto front (pareto.csv).
int run_pareto(const RunConfig &config, std::ostream &out);

/// Prints the analytic FLOPs breakdown of a genotype without training.
int run_flops(const RunConfig &config, std::ostream &out);

} // namespace hqnas::cli
