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

#include "hqnas/hqnn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hqnas/errors.hpp"
#include "hqnas/qsim/gradients.hpp"

namespace hqnas::hqnn {

namespace {

// Intermediate activations of one sample pass, kept for the backward sweep.
struct ForwardTrace {
    std::vector<double> pre_out;   // pre(x)
    std::vector<double> tanh_out;  // tanh(pre(x))
    std::vector<double> enc_in;    // encoder input (scaled for angle path)
    std::vector<double> z;         // per-qubit <Z>
    std::vector<double> logits;
};

ForwardTrace run_forward(const HybridModel &model, std::span<const double> x) {
    ForwardTrace t;
    t.pre_out = nnet::dense_forward(model.pre, x);
    t.tanh_out.resize(t.pre_out.size());
    for (std::size_t i = 0; i < t.pre_out.size(); ++i) {
        t.tanh_out[i] = std::tanh(t.pre_out[i]);
    }
    t.enc_in = t.tanh_out;
    if (model.genotype.encoding == Encoding::kAngle) {
        for (double &v : t.enc_in) {
            v *= std::numbers::pi;
        }
    }
    t.z = qsim::forward(model.circuit, model.theta, t.enc_in);
    t.logits = nnet::dense_forward(model.post, t.z);
    return t;
}

// Flat gradient accumulator matching the model's trainable tensors.
struct GradientBuffer {
    std::vector<double> pre_w, pre_b, theta, post_w, post_b;

    explicit GradientBuffer(const HybridModel &m)
        : pre_w(m.pre.weights.size(), 0.0), pre_b(m.pre.biases.size(), 0.0),
          theta(m.theta.size(), 0.0), post_w(m.post.weights.size(), 0.0),
          post_b(m.post.biases.size(), 0.0) {}

    void scale(double s) {
        for (auto *vec : {&pre_w, &pre_b, &theta, &post_w, &post_b}) {
            for (double &v : *vec) {
                v *= s;
            }
        }
    }
};

// Accumulates d(loss)/d(params) for one sample into grads; returns the loss.
double backward_sample(const HybridModel &model, std::span<const double> x, int label,
                       GradientBuffer &grads) {
    const ForwardTrace t = run_forward(model, x);
    const nnet::XentResult xent = nnet::softmax_xent(t.logits, label);

    const nnet::DenseGradients post_g = nnet::dense_backward(model.post, t.z, xent.dlogits);
    const qsim::AdjointGradients q_g =
        qsim::grad_full_adjoint(model.circuit, model.theta, t.enc_in, post_g.dx);

    // Through the angle scale (x pi) and tanh.
    std::vector<double> d_pre(t.pre_out.size());
    const double scale =
        model.genotype.encoding == Encoding::kAngle ? std::numbers::pi : 1.0;
    for (std::size_t i = 0; i < d_pre.size(); ++i) {
        const double d_tanh = q_g.input_grads[i] * scale;
        d_pre[i] = d_tanh * (1.0 - t.tanh_out[i] * t.tanh_out[i]);
    }
    const nnet::DenseGradients pre_g = nnet::dense_backward(model.pre, x, d_pre);

    for (std::size_t i = 0; i < grads.pre_w.size(); ++i) {
        grads.pre_w[i] += pre_g.dweights[i];
    }
    for (std::size_t i = 0; i < grads.pre_b.size(); ++i) {
        grads.pre_b[i] += pre_g.dbiases[i];
    }
    for (std::size_t i = 0; i < grads.theta.size(); ++i) {
        grads.theta[i] += q_g.param_grads[i];
    }
    for (std::size_t i = 0; i < grads.post_w.size(); ++i) {
        grads.post_w[i] += post_g.dweights[i];
    }
    for (std::size_t i = 0; i < grads.post_b.size(); ++i) {
        grads.post_b[i] += post_g.dbiases[i];
    }
    return xent.loss;
}

} // namespace

HybridModel build(const Genotype &genotype, int input_dim, int num_classes, std::uint64_t seed) {
    validate(genotype);
    if (input_dim <= 0 || num_classes <= 0) {
        throw std::invalid_argument("model dimensions must be positive");
    }
    HybridModel model;
    model.genotype = genotype;
    model.circuit = qsim::CircuitSpec::from_genotype(genotype);
    model.input_dim = input_dim;
    model.num_classes = num_classes;

    Rng rng(seed);
    model.pre = nnet::make_dense(input_dim, model.circuit.input_dim(), rng);
    model.theta.resize(static_cast<std::size_t>(model.circuit.num_params()));
    for (double &p : model.theta) {
        // Small uniform angles around zero.
        p = (2.0 * rng.next_double() - 1.0) * 0.1;
    }
    model.post = nnet::make_dense(genotype.num_qubits, num_classes, rng);
    return model;
}

std::vector<double> forward_sample(const HybridModel &model, std::span<const double> x) {
    return run_forward(model, x).logits;
}

int predict(const HybridModel &model, std::span<const double> x) {
    const std::vector<double> logits = forward_sample(model, x);
    int best = 0;
    for (std::size_t i = 1; i < logits.size(); ++i) {
        if (logits[i] > logits[static_cast<std::size_t>(best)]) {
            best = static_cast<int>(i);
        }
    }
    return best;
}

TrainResult train(HybridModel &model, const data::Dataset &dataset,
                  std::span<const int> train_indices, const TrainConfig &config) {
    if (train_indices.empty()) {
        throw std::invalid_argument("training split is empty");
    }
    if (config.epochs <= 0 || config.batch_size <= 0 || config.lr <= 0.0) {
        throw std::invalid_argument("training hyperparameters must be positive");
    }

    // Dedicated shuffle stream, decoupled from the build-time draws.
    Rng shuffle_rng(stable_hash(config.seed, "train-shuffle", 0));

    nnet::AdamState adam_pre_w(model.pre.weights.size(), config.lr);
    nnet::AdamState adam_pre_b(model.pre.biases.size(), config.lr);
    nnet::AdamState adam_theta(model.theta.size(), config.lr);
    nnet::AdamState adam_post_w(model.post.weights.size(), config.lr);
    nnet::AdamState adam_post_b(model.post.biases.size(), config.lr);

    std::vector<int> order(train_indices.begin(), train_indices.end());
    TrainResult result;
    result.loss_curve.reserve(static_cast<std::size_t>(config.epochs));

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i) {
            const std::size_t j = shuffle_rng.next_below(i);
            std::swap(order[i - 1], order[j]);
        }

        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < order.size();
             start += static_cast<std::size_t>(config.batch_size)) {
            const std::size_t end =
                std::min(order.size(), start + static_cast<std::size_t>(config.batch_size));
            GradientBuffer grads(model);
            double batch_loss = 0.0;
            for (std::size_t k = start; k < end; ++k) {
                const int sample = order[k];
                batch_loss += backward_sample(model, dataset.row(sample),
                                              dataset.labels[static_cast<std::size_t>(sample)],
                                              grads);
            }
            const double inv = 1.0 / static_cast<double>(end - start);
            grads.scale(inv);
            epoch_loss += batch_loss;

            nnet::adam_step(model.pre.weights, grads.pre_w, adam_pre_w);
            nnet::adam_step(model.pre.biases, grads.pre_b, adam_pre_b);
            nnet::adam_step(model.theta, grads.theta, adam_theta);
            nnet::adam_step(model.post.weights, grads.post_w, adam_post_w);
            nnet::adam_step(model.post.biases, grads.post_b, adam_post_b);
        }
        result.loss_curve.push_back(epoch_loss / static_cast<double>(order.size()));
    }
    return result;
}

Evaluator::Evaluator(const data::Dataset &dataset, double test_fraction,
                     const TrainConfig &train_config, FlopsModel flops_model,
                     std::uint64_t global_seed)
    : train_config_(train_config), flops_model_(flops_model), global_seed_(global_seed) {
    split_ = data::stratified_split(dataset, test_fraction, global_seed);
    standardized_ = data::standardize(dataset, split_);
}

EvalResult Evaluator::evaluate(const Genotype &genotype, int generation) const {
    const std::string token = to_token(canonicalize(genotype));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = memo_.find(token);
        if (it != memo_.end()) {
            return it->second;
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    EvalResult result;
    try {
        TrainConfig cfg = train_config_;
        cfg.seed = stable_hash(global_seed_, token, static_cast<std::uint64_t>(generation));

        HybridModel model = build(canonicalize(genotype), input_dim(), num_classes(), cfg.seed);
        const TrainResult trained = train(model, standardized_, split_.train_indices, cfg);
        result.final_train_loss = trained.loss_curve.back();

        int correct = 0;
        for (const int i : split_.test_indices) {
            if (predict(model, standardized_.row(i)) ==
                standardized_.labels[static_cast<std::size_t>(i)]) {
                ++correct;
            }
        }
        result.test_accuracy =
            static_cast<double>(correct) / static_cast<double>(split_.test_indices.size());
        result.flops = flops_report(model.genotype, input_dim(), num_classes(), flops_model_);
    } catch (const std::exception &e) {
        throw EvalError("evaluation of " + token + " failed: " + e.what());
    }
    result.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::lock_guard<std::mutex> lock(mutex_);
    // A concurrent duplicate may have finished first; keep the existing entry
    // so every caller observes one consistent result per key.
    const auto [it, inserted] = memo_.emplace(token, result);
    return it->second;
}

std::size_t Evaluator::num_evaluations() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
}

} // namespace hqnas::hqnn
