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

#include "hqnas/qsim/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hqnas::qsim {

CircuitSpec CircuitSpec::from_genotype(const Genotype &g) {
    validate(g);
    CircuitSpec spec;
    spec.num_qubits = g.num_qubits;
    spec.encoding = g.encoding;
    spec.layer_axes.assign(g.rot_gates.begin(), g.rot_gates.begin() + g.depth);
    spec.entangler = g.entangler;
    spec.topology = g.topology;
    return spec;
}

std::vector<std::pair<int, int>> CircuitSpec::entangler_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q + 1 < num_qubits; ++q) {
        pairs.emplace_back(q, q + 1);
    }
    if (topology == Topology::kCircular) {
        pairs.emplace_back(num_qubits - 1, 0);
    }
    return pairs;
}

StateVector angle_encode(std::span<const double> features, FlopsCounter *counter) {
    const int n = static_cast<int>(features.size());
    if (n < 1) {
        throw std::invalid_argument("angle_encode needs at least one feature");
    }
    StateVector state = StateVector::zero_state(n);
    for (int q = 0; q < n; ++q) {
        apply_rotation(state, RotAxis::kRy, q, features[static_cast<std::size_t>(q)]);
        if (counter != nullptr) {
            counter->on_single_qubit_gate(n);
        }
    }
    return state;
}

StateVector amplitude_encode(std::span<const double> vec, FlopsCounter *counter) {
    const std::size_t len = vec.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("amplitude_encode input length " + std::to_string(len) +
                                    " is not a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < len) {
        ++n;
    }

    double sq = 0.0;
    for (const double v : vec) {
        sq += v * v;
    }
    const double norm = std::sqrt(sq);

    StateVector state(n);
    if (norm < 1e-12) {
        state.amps[0] = 1.0; // degenerate-input policy
    } else {
        for (std::size_t i = 0; i < len; ++i) {
            state.amps[i] = vec[i] / norm;
        }
    }
    if (counter != nullptr) {
        counter->on_amplitude_normalize(n);
    }
    return state;
}

StateVector encode_input(const CircuitSpec &spec, std::span<const double> input,
                         FlopsCounter *counter) {
    if (static_cast<int>(input.size()) != spec.input_dim()) {
        throw std::invalid_argument("encoding input length " + std::to_string(input.size()) +
                                    " does not match expected " + std::to_string(spec.input_dim()));
    }
    return spec.encoding == Encoding::kAngle ? angle_encode(input, counter)
                                             : amplitude_encode(input, counter);
}

void apply_variational_layers(const CircuitSpec &spec, std::span<const double> params,
                              StateVector &state, FlopsCounter *counter) {
    if (static_cast<int>(params.size()) != spec.num_params()) {
        throw std::invalid_argument("parameter count " + std::to_string(params.size()) +
                                    " does not match expected " +
                                    std::to_string(spec.num_params()));
    }
    const int n = spec.num_qubits;
    const auto pairs = spec.entangler_pairs();
    for (int layer = 0; layer < spec.depth(); ++layer) {
        const RotAxis axis = spec.layer_axes[static_cast<std::size_t>(layer)];
        for (int q = 0; q < n; ++q) {
            apply_rotation(state, axis, q, params[static_cast<std::size_t>(layer * n + q)]);
            if (counter != nullptr) {
                counter->on_single_qubit_gate(n);
            }
        }
        for (const auto &[control, target] : pairs) {
            apply_entangler(state, spec.entangler, control, target);
            if (counter != nullptr) {
                counter->on_entangler(n, spec.entangler);
            }
        }
    }
}

std::vector<double> measure_all_z(const StateVector &state, FlopsCounter *counter) {
    std::vector<double> out(static_cast<std::size_t>(state.num_qubits));
    for (int q = 0; q < state.num_qubits; ++q) {
        out[static_cast<std::size_t>(q)] = expectation_z(state, q);
        if (counter != nullptr) {
            counter->on_expectation_z(state.num_qubits);
        }
    }
    return out;
}

std::vector<double> forward(const CircuitSpec &spec, std::span<const double> params,
                            std::span<const double> input, FlopsCounter *counter) {
    StateVector state = encode_input(spec, input, counter);
    apply_variational_layers(spec, params, state, counter);
    return measure_all_z(state, counter);
}

} // namespace hqnas::qsim
