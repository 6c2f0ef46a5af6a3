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

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hqnas/cli.hpp"
#include "hqnas/errors.hpp"

namespace {

using hqnas::cli::RunConfig;

// Shared flags; every value set on the command line overrides the config file.
void add_common_options(CLI::App *cmd, RunConfig &config, std::string &config_path,
                        std::string &flops_model_name) {
    cmd->add_option("--config", config_path, "key = value configuration file");
    cmd->add_option("--dataset", config.dataset_path, "dataset CSV (header f0,...,label)");
    cmd->add_option("--seed", config.seed, "global random seed");
    cmd->add_option("--population", config.population, "NSGA-II population size");
    cmd->add_option("--max-generations", config.max_generations, "generation cap");
    cmd->add_option("--epochs", config.epochs, "training epochs per candidate");
    cmd->add_option("--flops-model", flops_model_name, "FLOPs cost model: dense | optimized")
        ->check(CLI::IsMember({"dense", "optimized"}));
    cmd->add_option("--jobs", config.jobs, "parallel candidate evaluations");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--genotype", config.genotype_token,
                    "genotype token, e.g. q4-ang-RyRzRxRx-cnot-lin-d2");
    cmd->add_option("--limit", config.limit, "enumerate: number of indices to visit");
    cmd->add_option("--offset", config.offset, "enumerate: first index to visit");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multi-objective architecture search for hybrid quantum-classical "
                 "neural networks (accuracy vs FLOPs)"};
    app.require_subcommand(1);

    RunConfig config;
    std::string config_path;
    std::string flops_model_name;

    CLI::App *search = app.add_subcommand("search", "run the NSGA-II architecture search");
    CLI::App *enumerate = app.add_subcommand("enumerate", "evaluate the space index by index");
    CLI::App *eval = app.add_subcommand("eval", "train and score a single genotype");
    CLI::App *pareto = app.add_subcommand("pareto", "extract the Pareto front of a results.csv");
    CLI::App *flops = app.add_subcommand("flops", "print the FLOPs breakdown of a genotype");

    for (CLI::App *cmd : {search, enumerate, eval, pareto, flops}) {
        add_common_options(cmd, config, config_path, flops_model_name);
    }
    pareto->add_option("results", config.results_path, "results.csv to filter");
    flops->add_option("--input-dim", config.input_dim,
                      "feature count when no dataset is given (default 4)");
    flops->add_option("--num-classes", config.num_classes,
                      "class count when no dataset is given (default 3)");

    try {
        // First pass fills flag values; the config file must apply underneath
        // them, so parse it into a fresh config and re-parse the flags on top.
        app.parse(argc, argv);
        if (!config_path.empty()) {
            RunConfig layered;
            hqnas::cli::apply_config_file(layered, config_path);
            config = layered;
            app.clear();
            app.parse(argc, argv);
        }
        if (!flops_model_name.empty()) {
            config.flops_model = hqnas::cli::parse_flops_model(flops_model_name);
        }
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const hqnas::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (search->parsed()) {
            return hqnas::cli::run_search(config, std::cout);
        }
        if (enumerate->parsed()) {
            return hqnas::cli::run_enumerate(config, std::cout);
        }
        if (eval->parsed()) {
            return hqnas::cli::run_eval(config, std::cout);
        }
        if (pareto->parsed()) {
            return hqnas::cli::run_pareto(config, std::cout);
        }
        if (flops->parsed()) {
            return hqnas::cli::run_flops(config, std::cout);
        }
        std::cerr << "config error: no subcommand given\n";
        return 2;
    } catch (const hqnas::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const hqnas::DataError &e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const hqnas::EvalError &e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
