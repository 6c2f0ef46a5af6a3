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

#include <cmath>
#include <stdexcept>

#include "hqnas/qsim/kernels.hpp"

namespace hqnas::qsim {

GateMatrix2 rotation_matrix(RotAxis axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (axis) {
    case RotAxis::kRx:
        return {Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
    case RotAxis::kRy:
        return {Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0)};
    case RotAxis::kRz:
        return {Complex(c, -s), Complex(0, 0), Complex(0, 0), Complex(c, s)};
    }
    throw std::invalid_argument("unknown rotation axis");
}

GateMatrix2 pauli_matrix(RotAxis axis) {
    switch (axis) {
    case RotAxis::kRx:
        return {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)};
    case RotAxis::kRy:
        return {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)};
    case RotAxis::kRz:
        return {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)};
    }
    throw std::invalid_argument("unknown rotation axis");
}

namespace serial {

void apply_single_qubit(std::span<Complex> amps, int num_qubits, int qubit,
                        const GateMatrix2 &m) {
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t pairs = std::size_t{1} << (num_qubits - 1);
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::size_t i1 = i0 | mask;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = m.m00 * a0 + m.m01 * a1;
        amps[i1] = m.m10 * a0 + m.m11 * a1;
    }
}

void apply_cnot(std::span<Complex> amps, int num_qubits, int control, int target) {
    (void)num_qubits;
    const std::size_t control_mask = std::size_t{1} << control;
    const std::size_t target_mask = std::size_t{1} << target;
    // Visit each {control=1, target=0/1} pair once by iterating target=0 slots.
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & control_mask) && !(i & target_mask)) {
            std::swap(amps[i], amps[i | target_mask]);
        }
    }
}

void apply_cz(std::span<Complex> amps, int num_qubits, int control, int target) {
    (void)num_qubits;
    const std::size_t both = (std::size_t{1} << control) | (std::size_t{1} << target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) {
            amps[i] = -amps[i];
        }
    }
}

double expectation_z(std::span<const Complex> amps, int num_qubits, int qubit) {
    (void)num_qubits;
    const std::size_t mask = std::size_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double p = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
        acc += (i & mask) ? -p : p;
    }
    return acc;
}

double squared_norm(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const Complex &a : amps) {
        acc += a.real() * a.real() + a.imag() * a.imag();
    }
    return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

} // namespace serial

namespace {

void check_qubit(const StateVector &state, int qubit) {
    if (qubit < 0 || qubit >= state.num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range [0, " +
                                std::to_string(state.num_qubits) + ")");
    }
}

bool use_parallel(const StateVector &state) {
    return state.num_qubits >= kParallelThresholdQubits;
}

} // namespace

void apply_single_qubit(StateVector &state, int qubit, const GateMatrix2 &m) {
    check_qubit(state, qubit);
    if (use_parallel(state)) {
        omp::apply_single_qubit(state.amps, state.num_qubits, qubit, m);
    } else {
        serial::apply_single_qubit(state.amps, state.num_qubits, qubit, m);
    }
}

void apply_pauli(StateVector &state, RotAxis axis, int qubit) {
    apply_single_qubit(state, qubit, pauli_matrix(axis));
}

void apply_rotation(StateVector &state, RotAxis axis, int qubit, double angle) {
    apply_single_qubit(state, qubit, rotation_matrix(axis, angle));
}

void apply_entangler(StateVector &state, EntanglerKind kind, int control, int target) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target) {
        throw std::out_of_range("entangler control and target must differ, both are " +
                                std::to_string(control));
    }
    if (use_parallel(state)) {
        if (kind == EntanglerKind::kCnot) {
            omp::apply_cnot(state.amps, state.num_qubits, control, target);
        } else {
            omp::apply_cz(state.amps, state.num_qubits, control, target);
        }
    } else {
        if (kind == EntanglerKind::kCnot) {
            serial::apply_cnot(state.amps, state.num_qubits, control, target);
        } else {
            serial::apply_cz(state.amps, state.num_qubits, control, target);
        }
    }
}

double expectation_z(const StateVector &state, int qubit) {
    check_qubit(state, qubit);
    if (use_parallel(state)) {
        return omp::expectation_z(state.amps, state.num_qubits, qubit);
    }
    return serial::expectation_z(state.amps, state.num_qubits, qubit);
}

double squared_norm(const StateVector &state) {
    if (use_parallel(state)) {
        return omp::squared_norm(state.amps);
    }
    return serial::squared_norm(state.amps);
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    if (use_parallel(a)) {
        return omp::inner_product(a.amps, b.amps);
    }
    return serial::inner_product(a.amps, b.amps);
}

} // namespace hqnas::qsim
