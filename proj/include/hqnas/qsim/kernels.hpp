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

#include "hqnas/genotype.hpp"
#include "hqnas/qsim/state.hpp"

namespace hqnas::qsim {

/// Row-major 2x2 complex gate matrix.
struct GateMatrix2 {
    Complex m00, m01, m10, m11;
};

/// Standard rotation unitary exp(-i * angle/2 * sigma_axis).
GateMatrix2 rotation_matrix(RotAxis axis, double angle);

/// Pauli matrix for the given axis (the rotation generator).
GateMatrix2 pauli_matrix(RotAxis axis);

// Serial reference kernels. These are the ground truth the OpenMP variants
// are tested against; they also serve small states, where threading overhead
// dominates.
namespace serial {

void apply_single_qubit(std::span<Complex> amps, int num_qubits, int qubit, const GateMatrix2 &m);
void apply_cnot(std::span<Complex> amps, int num_qubits, int control, int target);
void apply_cz(std::span<Complex> amps, int num_qubits, int control, int target);
double expectation_z(std::span<const Complex> amps, int num_qubits, int qubit);
double squared_norm(std::span<const Complex> amps);
/// Inner product <a|b> = sum_i conj(a_i) * b_i.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

} // namespace serial

// OpenMP kernels. Gate application writes disjoint amplitude pairs, so the
// result is bit-identical to the serial kernels for any thread count.
// Reductions accumulate fixed-size chunk partials that are combined in chunk
// order, which keeps them deterministic as well.
namespace omp {

void apply_single_qubit(std::span<Complex> amps, int num_qubits, int qubit, const GateMatrix2 &m);
void apply_cnot(std::span<Complex> amps, int num_qubits, int control, int target);
void apply_cz(std::span<Complex> amps, int num_qubits, int control, int target);
double expectation_z(std::span<const Complex> amps, int num_qubits, int qubit);
double squared_norm(std::span<const Complex> amps);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

} // namespace omp

/// States with at least this many qubits are routed to the OpenMP kernels.
inline constexpr int kParallelThresholdQubits = 14;

// Dispatching entry points: validate indices, then pick the serial or OpenMP
// kernel by state size. All search-space circuits (n <= 10) run serially;
// candidate evaluation parallelizes across architectures instead.

void apply_single_qubit(StateVector &state, int qubit, const GateMatrix2 &m);
void apply_pauli(StateVector &state, RotAxis axis, int qubit);
void apply_rotation(StateVector &state, RotAxis axis, int qubit, double angle);
void apply_entangler(StateVector &state, EntanglerKind kind, int control, int target);
double expectation_z(const StateVector &state, int qubit);
double squared_norm(const StateVector &state);
Complex inner_product(const StateVector &a, const StateVector &b);

} // namespace hqnas::qsim
