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
#include <utility>
#include <vector>

#include "hqnas/flops.hpp"
#include "hqnas/genotype.hpp"
#include "hqnas/qsim/kernels.hpp"
#include "hqnas/qsim/state.hpp"

namespace hqnas::qsim {

/**
 * @brief Executable circuit derived from a genotype.
 *
 * Gate order: encoding stage, then per active layer one rotation (that
 * layer's axis) on every qubit followed by the entangling stage. Rotation
 * parameters are indexed layer-major: params[layer * n + qubit].
 */
struct CircuitSpec {
    int num_qubits = 2;
    Encoding encoding = Encoding::kAngle;
    std::vector<RotAxis> layer_axes; // active layers only
    EntanglerKind entangler = EntanglerKind::kCnot;
    Topology topology = Topology::kLinear;

    static CircuitSpec from_genotype(const Genotype &g);

    int depth() const { return static_cast<int>(layer_axes.size()); }
    int num_params() const { return num_qubits * depth(); }

    /// Input length expected by the encoding stage: n (angle) or 2^n (amplitude).
    int input_dim() const {
        return encoding == Encoding::kAngle ? num_qubits : (1 << num_qubits);
    }

    /// (control, target) pairs: (0,1),(1,2),...,(n-2,n-1), plus (n-1,0) if circular.
    std::vector<std::pair<int, int>> entangler_pairs() const;
};

/// Product state from per-qubit Ry rotations: tensor_q Ry(features[q]) |0>.
StateVector angle_encode(std::span<const double> features, FlopsCounter *counter = nullptr);

/**
 * @brief State with amplitudes vec / ||vec||.
 *
 * vec length must be a power of two (>= 2). A vector with norm below 1e-12
 * maps to |0...0> by policy.
 */
StateVector amplitude_encode(std::span<const double> vec, FlopsCounter *counter = nullptr);

/// Encoding stage of a circuit; validates input length against the spec.
StateVector encode_input(const CircuitSpec &spec, std::span<const double> input,
                         FlopsCounter *counter = nullptr);

/// Applies all variational layers (rotations + entanglers) in place.
void apply_variational_layers(const CircuitSpec &spec, std::span<const double> params,
                              StateVector &state, FlopsCounter *counter = nullptr);

/// Per-qubit Pauli-Z expectations of a state.
std::vector<double> measure_all_z(const StateVector &state, FlopsCounter *counter = nullptr);

/**
 * @brief Full forward pass: encode, run all layers, read out per-qubit <Z>.
 *
 * params length must equal spec.num_params(); input length spec.input_dim().
 */
std::vector<double> forward(const CircuitSpec &spec, std::span<const double> params,
                            std::span<const double> input, FlopsCounter *counter = nullptr);

} // namespace hqnas::qsim
