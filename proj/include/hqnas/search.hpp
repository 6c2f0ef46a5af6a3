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

#include <string>
#include <utility>

#include "hqnas/genotype.hpp"
#include "hqnas/hqnn.hpp"
#include "hqnas/nsga2.hpp"

namespace hqnas {

/**
 * @brief Adapts the architecture space and the training evaluator to the
 * NSGA-II engine.
 *
 * Objectives are (1 - test accuracy, total per-inference FLOPs), both
 * minimized. Candidate identity is the canonical genotype token, so inert
 * rotation genes never cause duplicate training.
 */
struct HqnnSearchProblem {
    using Geno = Genotype;

    SearchSpace space;
    const hqnn::Evaluator *evaluator = nullptr;

    Geno random_genotype(Rng &rng) const { return space.random_genotype(rng); }
    Geno mutate(const Geno &g, Rng &rng) const { return space.mutate(g, rng); }
    std::pair<Geno, Geno> crossover(const Geno &a, const Geno &b, Rng &rng) const {
        return space.crossover(a, b, rng);
    }
    std::string key(const Geno &g) const { return to_token(canonicalize(g)); }

    moo::Objectives evaluate(const Geno &g, int generation) const {
        const hqnn::EvalResult r = evaluator->evaluate(g, generation);
        return {1.0 - r.test_accuracy, static_cast<double>(r.flops.total_flops)};
    }

    std::size_t num_evaluations() const { return evaluator->num_evaluations(); }
};

/**
 * @brief Hypervolume reference point for the stop rule:
 * (1.0, 1.1 * max feasible total FLOPs over the space).
 */
moo::Objectives hv_reference_for(const SearchSpace &space, int input_dim, int num_classes,
                                 FlopsModel model);

} // namespace hqnas
