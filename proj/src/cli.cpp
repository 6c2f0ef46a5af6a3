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

#include "hqnas/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "hqnas/data.hpp"
#include "hqnas/errors.hpp"
#include "hqnas/hqnn.hpp"
#include "hqnas/results_io.hpp"
#include "hqnas/search.hpp"

namespace hqnas::cli {

namespace {

namespace fs = std::filesystem;

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

hqnn::TrainConfig train_config_of(const RunConfig &config) {
    hqnn::TrainConfig tc;
    tc.epochs = config.epochs;
    tc.batch_size = config.batch_size;
    tc.lr = config.lr;
    tc.seed = config.seed;
    return tc;
}

data::Dataset load_dataset(const RunConfig &config) {
    if (config.dataset_path.empty()) {
        throw ConfigError("this command requires --dataset");
    }
    return data::load_csv(config.dataset_path);
}

void ensure_out_dir(const RunConfig &config) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory '" + config.out_dir +
                          "': " + ec.message());
    }
}

void echo_effective_config(const RunConfig &config, const std::string &mode) {
    std::ofstream out(fs::path(config.out_dir) / "config_effective.txt");
    out << "mode = " << mode << '\n';
    out << "dataset = " << config.dataset_path << '\n';
    out << "out = " << config.out_dir << '\n';
    out << "seed = " << config.seed << '\n';
    out << "population = " << config.population << '\n';
    out << "max-generations = " << config.max_generations << '\n';
    out << "crossover-prob = " << config.p_crossover << '\n';
    out << "mutation-prob = " << config.p_mutation << '\n';
    out << "stall-generations = " << config.stall_generations << '\n';
    out << "hv-epsilon = " << config.hv_epsilon << '\n';
    out << "epochs = " << config.epochs << '\n';
    out << "batch-size = " << config.batch_size << '\n';
    out << "lr = " << config.lr << '\n';
    out << "test-fraction = " << config.test_fraction << '\n';
    out << "flops-model = " << (config.flops_model == FlopsModel::kDense ? "dense" : "optimized")
        << '\n';
    out << "jobs = " << config.jobs << '\n';
    if (!config.genotype_token.empty()) {
        out << "genotype = " << config.genotype_token << '\n';
    }
    if (config.limit != UINT64_MAX) {
        out << "limit = " << config.limit << '\n';
    }
    if (config.offset != 0) {
        out << "offset = " << config.offset << '\n';
    }
}

ResultsRow make_row(const std::string &token, const hqnn::EvalResult &result, int generation,
                    std::uint64_t seed) {
    ResultsRow row;
    row.genotype = token;
    row.accuracy = result.test_accuracy;
    row.classical_flops = result.flops.classical_flops;
    row.quantum_flops = result.flops.quantum_flops;
    row.total_flops = result.flops.total_flops;
    row.generation = generation;
    row.seed = seed;
    return row;
}

void write_scatters(const RunConfig &config, std::span<const ResultsRow> rows) {
    const fs::path dir(config.out_dir);
    write_scatter_svg((dir / "scatter_classical.svg").string(), rows, FlopsView::kClassical);
    write_scatter_svg((dir / "scatter_quantum.svg").string(), rows, FlopsView::kQuantum);
    write_scatter_svg((dir / "scatter_total.svg").string(), rows, FlopsView::kTotal);
}

} // namespace

FlopsModel parse_flops_model(const std::string &name) {
    if (name == "dense") {
        return FlopsModel::kDense;
    }
    if (name == "optimized") {
        return FlopsModel::kOptimized;
    }
    throw ConfigError("flops-model must be 'dense' or 'optimized', got '" + name + "'");
}

void apply_config_file(RunConfig &config, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) {
            line.resize(comment);
        }
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ": line " + std::to_string(line_number) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        try {
            if (key == "dataset") {
                config.dataset_path = value;
            } else if (key == "out") {
                config.out_dir = value;
            } else if (key == "genotype") {
                config.genotype_token = value;
            } else if (key == "seed") {
                config.seed = std::stoull(value);
            } else if (key == "population") {
                config.population = std::stoi(value);
            } else if (key == "max-generations") {
                config.max_generations = std::stoi(value);
            } else if (key == "crossover-prob") {
                config.p_crossover = std::stod(value);
            } else if (key == "mutation-prob") {
                config.p_mutation = std::stod(value);
            } else if (key == "stall-generations") {
                config.stall_generations = std::stoi(value);
            } else if (key == "hv-epsilon") {
                config.hv_epsilon = std::stod(value);
            } else if (key == "epochs") {
                config.epochs = std::stoi(value);
            } else if (key == "batch-size") {
                config.batch_size = std::stoi(value);
            } else if (key == "lr") {
                config.lr = std::stod(value);
            } else if (key == "test-fraction") {
                config.test_fraction = std::stod(value);
            } else if (key == "flops-model") {
                config.flops_model = parse_flops_model(value);
            } else if (key == "jobs") {
                config.jobs = std::stoi(value);
            } else if (key == "limit") {
                config.limit = std::stoull(value);
            } else if (key == "offset") {
                config.offset = std::stoull(value);
            } else if (key == "input-dim") {
                config.input_dim = std::stoi(value);
            } else if (key == "num-classes") {
                config.num_classes = std::stoi(value);
            } else {
                throw ConfigError(path + ": line " + std::to_string(line_number) +
                                  ": unknown key '" + key + "'");
            }
        } catch (const ConfigError &) {
            throw;
        } catch (const std::exception &) {
            throw ConfigError(path + ": line " + std::to_string(line_number) + ": bad value '" +
                              value + "' for key '" + key + "'");
        }
    }
}

void validate_common(const RunConfig &config) {
    if (config.population <= 0) {
        throw ConfigError("population must be positive");
    }
    if (config.max_generations <= 0) {
        throw ConfigError("max-generations must be positive");
    }
    if (config.p_crossover < 0.0 || config.p_crossover > 1.0 || config.p_mutation < 0.0 ||
        config.p_mutation > 1.0) {
        throw ConfigError("crossover/mutation probabilities must lie in [0, 1]");
    }
    if (config.stall_generations <= 0) {
        throw ConfigError("stall-generations must be positive");
    }
    if (config.epochs <= 0 || config.batch_size <= 0 || config.lr <= 0.0) {
        throw ConfigError("epochs, batch-size, and lr must be positive");
    }
    if (config.test_fraction <= 0.0 || config.test_fraction >= 1.0) {
        throw ConfigError("test-fraction must lie in (0, 1)");
    }
    if (config.jobs <= 0) {
        throw ConfigError("jobs must be positive");
    }
}

int run_search(const RunConfig &config, std::ostream &out) {
    validate_common(config);
    const data::Dataset dataset = load_dataset(config);
    ensure_out_dir(config);
    echo_effective_config(config, "search");

    const hqnn::Evaluator evaluator(dataset, config.test_fraction, train_config_of(config),
                                    config.flops_model, config.seed);
    HqnnSearchProblem problem;
    problem.space = SearchSpace::full();
    problem.evaluator = &evaluator;

    moo::SearchConfig search;
    search.population_size = config.population;
    search.max_generations = config.max_generations;
    search.p_crossover = config.p_crossover;
    search.p_mutation = config.p_mutation;
    search.stall_generations = config.stall_generations;
    search.hv_epsilon = config.hv_epsilon;
    search.seed = config.seed;
    search.jobs = config.jobs;
    search.hv_reference = hv_reference_for(problem.space, evaluator.input_dim(),
                                           evaluator.num_classes(), config.flops_model);

    const auto result = moo::nsga2_run(problem, search);

    std::vector<ResultsRow> rows;
    rows.reserve(result.archive.size());
    for (const auto &entry : result.archive) {
        const hqnn::EvalResult eval = evaluator.evaluate(entry.genotype, entry.generation);
        rows.push_back(make_row(entry.key, eval, entry.generation, config.seed));
    }
    assign_pareto_flags(rows);

    const fs::path dir(config.out_dir);
    write_results_csv((dir / "results.csv").string(), rows);
    write_generations_csv((dir / "generations.csv").string(), result.stats);
    const std::vector<ResultsRow> front = pareto_rows(rows);
    write_results_csv((dir / "pareto.csv").string(), front);
    write_scatters(config, rows);

    out << "search: evaluated " << rows.size() << " unique architectures over "
        << result.generations_run << " generations"
        << (result.stopped_by_stall ? " (stopped by stall rule)" : "") << "\n";
    out << "search: Pareto front holds " << front.size() << " architectures\n";
    out << "search: artifacts written to " << config.out_dir << "\n";
    return 0;
}

int run_enumerate(const RunConfig &config, std::ostream &out) {
    validate_common(config);
    const SearchSpace space = SearchSpace::full();
    if (config.offset > space.size()) {
        throw ConfigError("offset " + std::to_string(config.offset) + " exceeds the space size " +
                          std::to_string(space.size()));
    }
    const std::uint64_t remaining = space.size() - config.offset;
    const std::uint64_t end = config.offset + std::min(config.limit, remaining);

    const data::Dataset dataset = load_dataset(config);
    ensure_out_dir(config);
    echo_effective_config(config, "enumerate");
    const std::string results_path = (fs::path(config.out_dir) / "results.csv").string();

    std::vector<ResultsRow> rows;
    std::map<std::string, bool> seen;
    if (fs::exists(results_path)) {
        rows = read_results_csv(results_path);
        for (const ResultsRow &row : rows) {
            if (row.seed != config.seed) {
                throw ConfigError("existing results.csv was produced with seed " +
                                  std::to_string(row.seed) + "; refusing to mix with seed " +
                                  std::to_string(config.seed));
            }
            seen.emplace(row.genotype, true);
        }
        out << "enumerate: resuming over " << rows.size() << " existing rows\n";
    }

    const hqnn::Evaluator evaluator(dataset, config.test_fraction, train_config_of(config),
                                    config.flops_model, config.seed);
    std::uint64_t fresh = 0;
    for (std::uint64_t i = config.offset; i < end; ++i) {
        const Genotype g = canonicalize(space.decode(i));
        const std::string token = to_token(g);
        if (!seen.emplace(token, true).second) {
            continue;
        }
        const hqnn::EvalResult eval = evaluator.evaluate(g, 0);
        rows.push_back(make_row(token, eval, 0, config.seed));
        ++fresh;
    }
    assign_pareto_flags(rows);
    write_results_csv(results_path, rows);

    out << "enumerate: evaluated " << fresh << " new architectures (indices [" << config.offset
        << ", " << end << ")), " << rows.size() << " rows total\n";
    return 0;
}

int run_eval(const RunConfig &config, std::ostream &out) {
    validate_common(config);
    if (config.genotype_token.empty()) {
        throw ConfigError("eval requires --genotype <token>");
    }
    Genotype g;
    try {
        g = parse_token(config.genotype_token);
    } catch (const std::exception &e) {
        throw ConfigError(e.what());
    }
    const data::Dataset dataset = load_dataset(config);
    const hqnn::Evaluator evaluator(dataset, config.test_fraction, train_config_of(config),
                                    config.flops_model, config.seed);
    const hqnn::EvalResult eval = evaluator.evaluate(g, 0);
    ResultsRow row = make_row(to_token(canonicalize(g)), eval, 0, config.seed);
    row.is_pareto = true; // a single row is trivially non-dominated

    out << kResultsHeader << "\n";
    out << row.genotype << ',' << format_accuracy(row.accuracy) << ',' << row.classical_flops
        << ',' << row.quantum_flops << ',' << row.total_flops << ',' << (row.is_pareto ? 1 : 0)
        << ',' << row.generation << ',' << row.seed << "\n";
    out << "final_train_loss: " << eval.final_train_loss << "\n";
    out << "wall_time_sec: " << eval.wall_time_sec << "\n";
    out << "breakdown:\n";
    for (const auto &[stage, flops] : eval.flops.breakdown) {
        out << "  " << stage << ": " << flops << "\n";
    }
    return 0;
}

int run_pareto(const RunConfig &config, std::ostream &out) {
    if (config.results_path.empty()) {
        throw ConfigError("pareto requires a results.csv path");
    }
    const std::vector<ResultsRow> rows = read_results_csv(config.results_path);
    std::vector<ResultsRow> front = pareto_rows(rows);
    for (ResultsRow &row : front) {
        row.is_pareto = true;
    }

    fs::path out_path;
    if (config.out_dir.empty() || config.out_dir == "out") {
        out_path = fs::path(config.results_path).parent_path() / "pareto.csv";
    } else {
        ensure_out_dir(config);
        out_path = fs::path(config.out_dir) / "pareto.csv";
    }
    write_results_csv(out_path.string(), front);
    out << "pareto: " << front.size() << " non-dominated rows of " << rows.size() << " written to "
        << out_path.string() << "\n";
    return 0;
}

int run_flops(const RunConfig &config, std::ostream &out) {
    if (config.genotype_token.empty()) {
        throw ConfigError("flops requires --genotype <token>");
    }
    Genotype g;
    try {
        g = parse_token(config.genotype_token);
    } catch (const std::exception &e) {
        throw ConfigError(e.what());
    }
    int input_dim = config.input_dim;
    int num_classes = config.num_classes;
    if (!config.dataset_path.empty()) {
        const data::Dataset dataset = data::load_csv(config.dataset_path);
        input_dim = dataset.num_features;
        num_classes = dataset.num_classes;
    }
    const FlopsReport report = flops_report(g, input_dim, num_classes, config.flops_model);
    out << "genotype: " << to_token(g) << "\n";
    out << "input_dim: " << input_dim << ", num_classes: " << num_classes << ", model: "
        << (config.flops_model == FlopsModel::kDense ? "dense" : "optimized") << "\n";
    out << "classical_flops: " << report.classical_flops << "\n";
    out << "quantum_flops: " << report.quantum_flops << "\n";
    out << "total_flops: " << report.total_flops << "\n";
    out << "breakdown:\n";
    for (const auto &[stage, flops] : report.breakdown) {
        out << "  " << stage << ": " << flops << "\n";
    }
    return 0;
}

} // namespace hqnas::cli
