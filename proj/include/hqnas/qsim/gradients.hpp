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

#include "hqnas/qsim/circuit.hpp"

namespace hqnas::qsim {

/**
 * @brief Parameter-shift Jacobian of the per-qubit Z readouts.
 *
 * jac[k][q] = d<Z_q> / d theta_k = [f_q(theta_k + pi/2) - f_q(theta_k - pi/2)] / 2.
 * Exact for the rotation gates used here. Two circuit evaluations per
 * parameter; kept as a public operation and test oracle for the adjoint path.
 */
std::vector<std::vector<double>> grad_params_shift(const CircuitSpec &spec,
                                                   std::span<const double> params,
                                                   std::span<const double> input);

struct AdjointGradients {
    std::vector<double> param_grads; // one per rotation parameter
    std::vector<double> input_grads; // one per raw (pre-normalization) input feature
};

/**
 * @brief Exact reverse-mode gradients of sum_q upstream[q] * <Z_q>.
 *
 * One forward and one backward sweep through the circuit. Gradients cover all
 * rotation parameters and all raw input features: for angle encoding the
 * backward sweep continues through the encoding rotations; for amplitude
 * encoding the normalization Jacobian is applied, and the degenerate zero
 * vector gets zero input gradients.
 */
AdjointGradients grad_full_adjoint(const CircuitSpec &spec, std::span<const double> params,
                                   std::span<const double> input,
                                   std::span<const double> upstream);

} // namespace hqnas::qsim
