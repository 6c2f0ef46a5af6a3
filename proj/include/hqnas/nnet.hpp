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

#include <span>
#include <vector>

#include "hqnas/rng.hpp"

namespace hqnas::nnet {

/// Fully connected affine layer: y = x^T W + b, weights row-major [in][out].
struct DenseLayer {
    int in_dim = 0;
    int out_dim = 0;
    std::vector<double> weights;
    std::vector<double> biases;
};

/// Weights uniform in +/- sqrt(6 / (in + out)), biases zero.
DenseLayer make_dense(int in_dim, int out_dim, Rng &rng);

std::vector<double> dense_forward(const DenseLayer &layer, std::span<const double> x);

struct DenseGradients {
    std::vector<double> dx;
    std::vector<double> dweights;
    std::vector<double> dbiases;
};

DenseGradients dense_backward(const DenseLayer &layer, std::span<const double> x,
                              std::span<const double> dy);

std::vector<double> softmax(std::span<const double> logits);

struct XentResult {
    double loss = 0.0;
    std::vector<double> dlogits; // softmax(logits) - onehot(label)
};

/// Cross-entropy of softmax(logits) against an integer label.
XentResult softmax_xent(std::span<const double> logits, int label);

/**
 * @brief Adam accumulator for one parameter tensor.
 */
struct AdamState {
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long step = 0;
    std::vector<double> m;
    std::vector<double> v;

    AdamState() = default;
    AdamState(std::size_t num_params, double learning_rate)
        : lr(learning_rate), m(num_params, 0.0), v(num_params, 0.0) {}
};

/// Standard Adam update with bias correction; deterministic.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState &state);

} // namespace hqnas::nnet
