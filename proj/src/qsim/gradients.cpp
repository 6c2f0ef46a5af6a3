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

#include "hqnas/qsim/gradients.hpp"

#include <cmath>
#include <stdexcept>

namespace hqnas::qsim {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Gradient contribution of a rotation gate during the backward sweep.
// With mu the state just after the gate and b the back-propagated observable
// state, d/d theta of <psi|O|psi> is Im(<b| sigma_axis |mu>).
double rotation_grad(const StateVector &b, const StateVector &mu, RotAxis axis, int qubit) {
    StateVector tmp = mu;
    apply_pauli(tmp, axis, qubit);
    return inner_product(b, tmp).imag();
}

} // namespace

std::vector<std::vector<double>> grad_params_shift(const CircuitSpec &spec,
                                                   std::span<const double> params,
                                                   std::span<const double> input) {
    if (static_cast<int>(params.size()) != spec.num_params()) {
        throw std::invalid_argument("parameter count " + std::to_string(params.size()) +
                                    " does not match expected " +
                                    std::to_string(spec.num_params()));
    }
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<std::vector<double>> jac(params.size());
    for (std::size_t k = 0; k < params.size(); ++k) {
        shifted[k] = params[k] + kHalfPi;
        const std::vector<double> plus = forward(spec, shifted, input);
        shifted[k] = params[k] - kHalfPi;
        const std::vector<double> minus = forward(spec, shifted, input);
        shifted[k] = params[k];

        jac[k].resize(plus.size());
        for (std::size_t q = 0; q < plus.size(); ++q) {
            jac[k][q] = (plus[q] - minus[q]) / 2.0;
        }
    }
    return jac;
}

AdjointGradients grad_full_adjoint(const CircuitSpec &spec, std::span<const double> params,
                                   std::span<const double> input,
                                   std::span<const double> upstream) {
    if (static_cast<int>(upstream.size()) != spec.num_qubits) {
        throw std::invalid_argument("upstream length " + std::to_string(upstream.size()) +
                                    " does not match qubit count " +
                                    std::to_string(spec.num_qubits));
    }
    const int n = spec.num_qubits;

    // Forward pass.
    StateVector mu = encode_input(spec, input);
    apply_variational_layers(spec, params, mu);

    // b = O |psi> with O = sum_q upstream[q] Z_q, a diagonal observable.
    StateVector b(n);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double weight = 0.0;
        for (int q = 0; q < n; ++q) {
            weight += (i >> q) & 1 ? -upstream[static_cast<std::size_t>(q)]
                                   : upstream[static_cast<std::size_t>(q)];
        }
        b.amps[i] = weight * mu.amps[i];
    }

    AdjointGradients grads;
    grads.param_grads.assign(params.size(), 0.0);
    grads.input_grads.assign(input.size(), 0.0);

    // Backward sweep through the variational layers.
    const auto pairs = spec.entangler_pairs();
    for (int layer = spec.depth() - 1; layer >= 0; --layer) {
        for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
            // CNOT and CZ are self-inverse.
            apply_entangler(mu, spec.entangler, it->first, it->second);
            apply_entangler(b, spec.entangler, it->first, it->second);
        }
        const RotAxis axis = spec.layer_axes[static_cast<std::size_t>(layer)];
        for (int q = n - 1; q >= 0; --q) {
            const std::size_t k = static_cast<std::size_t>(layer * n + q);
            grads.param_grads[k] = rotation_grad(b, mu, axis, q);
            apply_rotation(mu, axis, q, -params[k]);
            apply_rotation(b, axis, q, -params[k]);
        }
    }

    // Input gradients through the encoding stage.
    if (spec.encoding == Encoding::kAngle) {
        for (int q = n - 1; q >= 0; --q) {
            grads.input_grads[static_cast<std::size_t>(q)] =
                rotation_grad(b, mu, RotAxis::kRy, q);
            apply_rotation(mu, RotAxis::kRy, q, -input[static_cast<std::size_t>(q)]);
            apply_rotation(b, RotAxis::kRy, q, -input[static_cast<std::size_t>(q)]);
        }
    } else {
        double sq = 0.0;
        for (const double v : input) {
            sq += v * v;
        }
        const double norm = std::sqrt(sq);
        if (norm >= 1e-12) {
            // mu is the (real-amplitude) encoded state u = v/||v||, and
            // b = M u with M the effective observable pulled back through the
            // circuit. d/dv_j of <u|M|u> = (2/||v||) (Re b_j - u_j <u|M|u>).
            const double value = inner_product(mu, b).real();
            for (std::size_t j = 0; j < input.size(); ++j) {
                grads.input_grads[j] =
                    2.0 / norm * (b.amps[j].real() - mu.amps[j].real() * value);
            }
        }
    }
    return grads;
}

} // namespace hqnas::qsim
