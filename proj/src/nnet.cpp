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

#include "hqnas/nnet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hqnas::nnet {

namespace {

void check_dim(std::size_t got, int want, const char *what) {
    if (got != static_cast<std::size_t>(want)) {
        throw std::invalid_argument(std::string(what) + " length " + std::to_string(got) +
                                    " does not match layer dimension " + std::to_string(want));
    }
}

} // namespace

DenseLayer make_dense(int in_dim, int out_dim, Rng &rng) {
    if (in_dim <= 0 || out_dim <= 0) {
        throw std::invalid_argument("dense layer dimensions must be positive");
    }
    DenseLayer layer;
    layer.in_dim = in_dim;
    layer.out_dim = out_dim;
    layer.weights.resize(static_cast<std::size_t>(in_dim) * static_cast<std::size_t>(out_dim));
    layer.biases.assign(static_cast<std::size_t>(out_dim), 0.0);
    const double bound = std::sqrt(6.0 / (in_dim + out_dim));
    for (double &w : layer.weights) {
        w = (2.0 * rng.next_double() - 1.0) * bound;
    }
    return layer;
}

std::vector<double> dense_forward(const DenseLayer &layer, std::span<const double> x) {
    check_dim(x.size(), layer.in_dim, "input");
    std::vector<double> y(layer.biases.begin(), layer.biases.end());
    for (int i = 0; i < layer.in_dim; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        const double *row = &layer.weights[static_cast<std::size_t>(i) *
                                           static_cast<std::size_t>(layer.out_dim)];
        for (int j = 0; j < layer.out_dim; ++j) {
            y[static_cast<std::size_t>(j)] += xi * row[j];
        }
    }
    return y;
}

DenseGradients dense_backward(const DenseLayer &layer, std::span<const double> x,
                              std::span<const double> dy) {
    check_dim(x.size(), layer.in_dim, "input");
    check_dim(dy.size(), layer.out_dim, "upstream gradient");
    DenseGradients g;
    g.dx.assign(x.size(), 0.0);
    g.dweights.resize(layer.weights.size());
    g.dbiases.assign(dy.begin(), dy.end());
    for (int i = 0; i < layer.in_dim; ++i) {
        const double *row = &layer.weights[static_cast<std::size_t>(i) *
                                           static_cast<std::size_t>(layer.out_dim)];
        double *grow = &g.dweights[static_cast<std::size_t>(i) *
                                   static_cast<std::size_t>(layer.out_dim)];
        double acc = 0.0;
        for (int j = 0; j < layer.out_dim; ++j) {
            acc += row[j] * dy[static_cast<std::size_t>(j)];
            grow[j] = x[static_cast<std::size_t>(i)] * dy[static_cast<std::size_t>(j)];
        }
        g.dx[static_cast<std::size_t>(i)] = acc;
    }
    return g;
}

std::vector<double> softmax(std::span<const double> logits) {
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    std::vector<double> out(logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out[i] = std::exp(logits[i] - max_logit);
        sum += out[i];
    }
    for (double &p : out) {
        p /= sum;
    }
    return out;
}

XentResult softmax_xent(std::span<const double> logits, int label) {
    if (label < 0 || static_cast<std::size_t>(label) >= logits.size()) {
        throw std::out_of_range("label " + std::to_string(label) + " out of range [0, " +
                                std::to_string(logits.size()) + ")");
    }
    XentResult result;
    result.dlogits = softmax(logits);
    // -log softmax[label], computed from shifted logits for stability.
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (const double l : logits) {
        sum += std::exp(l - max_logit);
    }
    result.loss = std::log(sum) - (logits[static_cast<std::size_t>(label)] - max_logit);
    result.dlogits[static_cast<std::size_t>(label)] -= 1.0;
    return result;
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState &state) {
    if (params.size() != grads.size() || params.size() != state.m.size()) {
        throw std::invalid_argument("adam_step shape mismatch: params " +
                                    std::to_string(params.size()) + ", grads " +
                                    std::to_string(grads.size()) + ", state " +
                                    std::to_string(state.m.size()));
    }
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < params.size(); ++i) {
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * grads[i];
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * grads[i] * grads[i];
        const double m_hat = state.m[i] / bc1;
        const double v_hat = state.v[i] / bc2;
        params[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.epsilon);
    }
}

} // namespace hqnas::nnet
