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
#include <string>
#include <utility>
#include <vector>

#include "hqnas/genotype.hpp"

namespace hqnas {

/**
 * @brief Cost model for per-inference floating-point operation counts.
 *
 * kDense charges every gate as a full sub-matrix mat-vec over the state
 * vector, so cost is proportional to circuit size. kOptimized instead charges
 * CNOT as pure amplitude permutation (0 arithmetic) and CZ as 2^(n-1) sign
 * flips; provided for sensitivity analysis.
 */
enum class FlopsModel { kDense, kOptimized };

enum class GateClass { kSingle, kControlledTwo };

/// Cost charged for one square root or exponential evaluation.
inline constexpr std::uint64_t kTranscendentalFlops = 20;

/**
 * @brief Dense-model cost of one gate applied to an n-qubit state vector.
 *
 * Single-qubit: 14 * 2^n real ops (2^(n-1) amplitude pairs, each a 2x2
 * complex mat-vec: 4 complex multiplies at 6 flops + 2 complex adds at 2).
 * Controlled two-qubit: 30 * 2^n (2^(n-2) groups of 4 amplitudes, each a
 * dense 4x4 complex mat-vec = 120 flops).
 */
std::uint64_t quantum_gate_flops(int num_qubits, GateClass gate_class);

/// Model-dependent cost of one entangling gate on an n-qubit state.
std::uint64_t entangler_flops(int num_qubits, EntanglerKind kind, FlopsModel model);

/// Per-qubit Pauli-Z readout: 3 * 2^n (|a|^2 per amplitude plus signed sum).
std::uint64_t measurement_flops_per_qubit(int num_qubits);

/**
 * @brief Cost of the data-encoding stage.
 *
 * Angle: n rotations at 14 * 2^n each. Amplitude: 3 * 2^n (square, sum,
 * divide per amplitude) plus one square root charged kTranscendentalFlops.
 */
std::uint64_t encoding_flops(const Genotype &g);

/**
 * @brief Quantum FLOPs of one forward pass of the PQC.
 *
 * encoding + depth * (n single-qubit rotations + E entanglers) + n-qubit
 * measurement, with E = n-1 (linear) or n (circular).
 */
std::uint64_t circuit_flops(const Genotype &g, FlopsModel model = FlopsModel::kDense);

/// Dense layer m -> k: 2mk + k real ops (multiply-add plus bias).
std::uint64_t dense_layer_flops(int in_dim, int out_dim);

/// Softmax over C classes: 3C + 20.
std::uint64_t softmax_flops(int num_classes);

/**
 * @brief Classical FLOPs of one forward pass of the fixed classical head/tail.
 *
 * pre dense + tanh (1/element) + angle scale (1/element, angle encoding only)
 * + post dense + softmax.
 */
std::uint64_t classical_flops(const Genotype &g, int input_dim, int num_classes);

/**
 * @brief Per-inference FLOPs of a hybrid model, split by execution domain.
 */
struct FlopsReport {
    std::uint64_t classical_flops = 0;
    std::uint64_t quantum_flops = 0;
    std::uint64_t total_flops = 0;
    std::vector<std::pair<std::string, std::uint64_t>> breakdown;
};

/// Full report for the hybrid model implied by (genotype, dataset dims).
FlopsReport flops_report(const Genotype &g, int input_dim, int num_classes,
                         FlopsModel model = FlopsModel::kDense);

/**
 * @brief Tallies quantum FLOPs as the simulator actually executes kernels.
 *
 * The simulator calls the hooks below once per kernel invocation with the
 * live state size, so the tally reflects the gates that really ran. Charges
 * use the same per-primitive constants as the analytic formulas; what the
 * counter verifies independently is the executed gate structure.
 */
struct FlopsCounter {
    FlopsModel model = FlopsModel::kDense;
    std::uint64_t quantum_flops = 0;

    void on_single_qubit_gate(int num_qubits) {
        quantum_flops += quantum_gate_flops(num_qubits, GateClass::kSingle);
    }
    void on_entangler(int num_qubits, EntanglerKind kind) {
        quantum_flops += entangler_flops(num_qubits, kind, model);
    }
    void on_amplitude_normalize(int num_qubits) {
        quantum_flops += (3ULL << num_qubits) + kTranscendentalFlops;
    }
    void on_expectation_z(int num_qubits) {
        quantum_flops += measurement_flops_per_qubit(num_qubits);
    }
};

} // namespace hqnas
