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
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "hqnas/data.hpp"
#include "hqnas/flops.hpp"
#include "hqnas/genotype.hpp"
#include "hqnas/nnet.hpp"
#include "hqnas/qsim/circuit.hpp"

namespace hqnas::hqnn {

struct TrainConfig {
    int epochs = 30;
    int batch_size = 16;
    double lr = 0.01;
    std::uint64_t seed = 0;
};

/**
 * @brief Trainable hybrid model: fixed-shape dense pre-layer, PQC, dense
 * post-layer.
 *
 * The classical architecture is a pure function of (genotype, dataset dims):
 * pre maps input_dim to the encoder width (n for angle encoding, 2^n for
 * amplitude), post maps the n Z-readouts to num_classes. Only the weights
 * train; the shapes never change during search.
 */
struct HybridModel {
    Genotype genotype;
    qsim::CircuitSpec circuit;
    nnet::DenseLayer pre;
    std::vector<double> theta; // rotation parameters, layer-major
    nnet::DenseLayer post;
    int input_dim = 0;
    int num_classes = 0;

    int enc_dim() const { return circuit.input_dim(); }
    std::size_t num_trainable() const {
        return pre.weights.size() + pre.biases.size() + theta.size() + post.weights.size() +
               post.biases.size();
    }
};

/// Deterministic given seed: same (genotype, dims, seed) gives identical weights.
HybridModel build(const Genotype &genotype, int input_dim, int num_classes, std::uint64_t seed);

/**
 * @brief Forward pass to logits.
 *
 * logits = post(qforward(encode(scale(tanh(pre(x)))))). The angle path scales
 * tanh outputs by pi so encoding angles cover one full period; the amplitude
 * path feeds tanh outputs straight into the normalizing encoder.
 */
std::vector<double> forward_sample(const HybridModel &model, std::span<const double> x);

/// Argmax over logits; ties break toward the lowest class index.
int predict(const HybridModel &model, std::span<const double> x);

struct TrainResult {
    std::vector<double> loss_curve; // mean train loss per epoch
};

/**
 * @brief Mini-batch Adam on softmax cross-entropy, end to end.
 *
 * Gradients flow through the post layer, the quantum circuit (adjoint
 * differentiation), and the pre layer. Deterministic given config.seed: the
 * shuffle stream and all weight initialization draw from it.
 */
TrainResult train(HybridModel &model, const data::Dataset &dataset,
                  std::span<const int> train_indices, const TrainConfig &config);

struct EvalResult {
    double test_accuracy = 0.0;
    double final_train_loss = 0.0;
    FlopsReport flops;
    double wall_time_sec = 0.0;
};

/**
 * @brief Trains and scores candidates against one dataset split; memoizes by
 * canonical genotype token.
 *
 * evaluate() is a pure function of (genotype, dataset, seed): the
 * per-candidate training seed is stable_hash(global seed, canonical token,
 * generation of first evaluation), so results do not depend on evaluation
 * scheduling. Thread-safe; concurrent calls with the same key behave as if
 * the memo were updated atomically.
 */
class Evaluator {
  public:
    Evaluator(const data::Dataset &dataset, double test_fraction, const TrainConfig &train_config,
              FlopsModel flops_model, std::uint64_t global_seed);

    EvalResult evaluate(const Genotype &genotype, int generation) const;

    /// Number of distinct canonical genotypes trained so far.
    std::size_t num_evaluations() const;

    const data::Dataset &standardized() const { return standardized_; }
    const data::DatasetSplit &split() const { return split_; }
    int input_dim() const { return standardized_.num_features; }
    int num_classes() const { return standardized_.num_classes; }
    std::uint64_t global_seed() const { return global_seed_; }

  private:
    data::Dataset standardized_;
    data::DatasetSplit split_;
    TrainConfig train_config_;
    FlopsModel flops_model_;
    std::uint64_t global_seed_;

    mutable std::mutex mutex_;
    mutable std::map<std::string, EvalResult> memo_;
};

} // namespace hqnas::hqnn
