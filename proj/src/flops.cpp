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

#include "hqnas/flops.hpp"

#include <stdexcept>

namespace hqnas {

std::uint64_t quantum_gate_flops(int num_qubits, GateClass gate_class) {
    switch (gate_class) {
    case GateClass::kSingle:
        if (num_qubits < 1) {
            throw std::invalid_argument("single-qubit gate needs num_qubits >= 1");
        }
        return 14ULL << num_qubits;
    case GateClass::kControlledTwo:
        if (num_qubits < 2) {
            throw std::invalid_argument("two-qubit gate needs num_qubits >= 2");
        }
        return 30ULL << num_qubits;
    }
    throw std::invalid_argument("unknown gate class");
}

std::uint64_t entangler_flops(int num_qubits, EntanglerKind kind, FlopsModel model) {
    if (model == FlopsModel::kDense) {
        return quantum_gate_flops(num_qubits, GateClass::kControlledTwo);
    }
    // Optimized model: CNOT is amplitude permutation only, CZ flips the sign
    // of the 2^(n-1) amplitudes whose control and target bits are both set --
    // charged as 2^(n-1) sign flips.
    return kind == EntanglerKind::kCnot ? 0ULL : (1ULL << (num_qubits - 1));
}

std::uint64_t measurement_flops_per_qubit(int num_qubits) { return 3ULL << num_qubits; }

std::uint64_t encoding_flops(const Genotype &g) {
    const int n = g.num_qubits;
    if (g.encoding == Encoding::kAngle) {
        return static_cast<std::uint64_t>(n) * quantum_gate_flops(n, GateClass::kSingle);
    }
    return (3ULL << n) + kTranscendentalFlops;
}

std::uint64_t circuit_flops(const Genotype &g, FlopsModel model) {
    const int n = g.num_qubits;
    const int pairs = g.topology == Topology::kLinear ? n - 1 : n;
    const std::uint64_t per_layer =
        static_cast<std::uint64_t>(n) * quantum_gate_flops(n, GateClass::kSingle) +
        static_cast<std::uint64_t>(pairs) * entangler_flops(n, g.entangler, model);
    return encoding_flops(g) + static_cast<std::uint64_t>(g.depth) * per_layer +
           static_cast<std::uint64_t>(n) * measurement_flops_per_qubit(n);
}

std::uint64_t dense_layer_flops(int in_dim, int out_dim) {
    return 2ULL * static_cast<std::uint64_t>(in_dim) * static_cast<std::uint64_t>(out_dim) +
           static_cast<std::uint64_t>(out_dim);
}

std::uint64_t softmax_flops(int num_classes) {
    return 3ULL * static_cast<std::uint64_t>(num_classes) + kTranscendentalFlops;
}

std::uint64_t classical_flops(const Genotype &g, int input_dim, int num_classes) {
    const int n = g.num_qubits;
    const int enc_dim = g.encoding == Encoding::kAngle ? n : (1 << n);
    std::uint64_t flops = dense_layer_flops(input_dim, enc_dim);
    flops += static_cast<std::uint64_t>(enc_dim); // tanh
    if (g.encoding == Encoding::kAngle) {
        flops += static_cast<std::uint64_t>(enc_dim); // scale by pi
    }
    flops += dense_layer_flops(n, num_classes);
    flops += softmax_flops(num_classes);
    return flops;
}

FlopsReport flops_report(const Genotype &g, int input_dim, int num_classes, FlopsModel model) {
    const int n = g.num_qubits;
    const int enc_dim = g.encoding == Encoding::kAngle ? n : (1 << n);
    const int pairs = g.topology == Topology::kLinear ? n - 1 : n;

    FlopsReport report;
    auto classical_stage = [&report](const std::string &label, std::uint64_t flops) {
        report.breakdown.emplace_back(label, flops);
        report.classical_flops += flops;
    };
    auto quantum_stage = [&report](const std::string &label, std::uint64_t flops) {
        report.breakdown.emplace_back(label, flops);
        report.quantum_flops += flops;
    };

    classical_stage("pre_dense", dense_layer_flops(input_dim, enc_dim));
    classical_stage("tanh", static_cast<std::uint64_t>(enc_dim));
    if (g.encoding == Encoding::kAngle) {
        classical_stage("angle_scale", static_cast<std::uint64_t>(enc_dim));
    }
    quantum_stage("encoding", encoding_flops(g));
    quantum_stage("rotations", static_cast<std::uint64_t>(g.depth) * n *
                                   quantum_gate_flops(n, GateClass::kSingle));
    quantum_stage("entanglers", static_cast<std::uint64_t>(g.depth) * pairs *
                                    entangler_flops(n, g.entangler, model));
    quantum_stage("measurement", static_cast<std::uint64_t>(n) * measurement_flops_per_qubit(n));
    classical_stage("post_dense", dense_layer_flops(n, num_classes));
    classical_stage("softmax", softmax_flops(num_classes));

    report.total_flops = report.classical_flops + report.quantum_flops;
    return report;
}

} // namespace hqnas
