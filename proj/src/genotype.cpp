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

#include "hqnas/genotype.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hqnas {

namespace {

// Gene positions in chromosome and enumeration order.
constexpr int kNumGenes = 9;

template <typename T> std::size_t index_of(const std::vector<T> &values, T v, const char *field) {
    const auto it = std::find(values.begin(), values.end(), v);
    if (it == values.end()) {
        throw std::invalid_argument(std::string("genotype field '") + field +
                                    "' outside the search space");
    }
    return static_cast<std::size_t>(it - values.begin());
}

const char *axis_name(RotAxis a) {
    switch (a) {
    case RotAxis::kRx:
        return "Rx";
    case RotAxis::kRy:
        return "Ry";
    case RotAxis::kRz:
        return "Rz";
    }
    return "Rx";
}

} // namespace

SearchSpace SearchSpace::full() {
    SearchSpace s;
    s.qubit_values = {2, 3, 4, 5, 6, 7, 8, 9, 10};
    s.encodings = {Encoding::kAngle, Encoding::kAmplitude};
    s.rot_axes = {RotAxis::kRx, RotAxis::kRy, RotAxis::kRz};
    s.entanglers = {EntanglerKind::kCnot, EntanglerKind::kCz};
    s.topologies = {Topology::kLinear, Topology::kCircular};
    s.depth_values = {1, 2, 3, 4};
    return s;
}

std::uint64_t SearchSpace::size() const {
    std::uint64_t n = qubit_values.size();
    n *= encodings.size();
    for (int i = 0; i < kMaxLayers; ++i) {
        n *= rot_axes.size();
    }
    n *= entanglers.size();
    n *= topologies.size();
    n *= depth_values.size();
    return n;
}

Genotype SearchSpace::decode(std::uint64_t index) const {
    if (index >= size()) {
        throw std::out_of_range("genotype index " + std::to_string(index) +
                                " out of range [0, " + std::to_string(size()) + ")");
    }
    // Peel digits least-significant first: depth, topology, entangler, rot[3..0],
    // encoding, qubits.
    Genotype g;
    g.depth = depth_values[index % depth_values.size()];
    index /= depth_values.size();
    g.topology = topologies[index % topologies.size()];
    index /= topologies.size();
    g.entangler = entanglers[index % entanglers.size()];
    index /= entanglers.size();
    for (int i = kMaxLayers - 1; i >= 0; --i) {
        g.rot_gates[i] = rot_axes[index % rot_axes.size()];
        index /= rot_axes.size();
    }
    g.encoding = encodings[index % encodings.size()];
    index /= encodings.size();
    g.num_qubits = qubit_values[index % qubit_values.size()];
    return g;
}

std::uint64_t SearchSpace::encode(const Genotype &g) const {
    std::uint64_t index = index_of(qubit_values, g.num_qubits, "num_qubits");
    index = index * encodings.size() + index_of(encodings, g.encoding, "encoding");
    for (int i = 0; i < kMaxLayers; ++i) {
        index = index * rot_axes.size() + index_of(rot_axes, g.rot_gates[i], "rot_gates");
    }
    index = index * entanglers.size() + index_of(entanglers, g.entangler, "entangler");
    index = index * topologies.size() + index_of(topologies, g.topology, "topology");
    index = index * depth_values.size() + index_of(depth_values, g.depth, "depth");
    return index;
}

bool SearchSpace::contains(const Genotype &g) const {
    auto in = [](const auto &values, auto v) {
        return std::find(values.begin(), values.end(), v) != values.end();
    };
    if (!in(qubit_values, g.num_qubits) || !in(encodings, g.encoding) ||
        !in(entanglers, g.entangler) || !in(topologies, g.topology) ||
        !in(depth_values, g.depth)) {
        return false;
    }
    for (const RotAxis a : g.rot_gates) {
        if (!in(rot_axes, a)) {
            return false;
        }
    }
    return true;
}

Genotype SearchSpace::random_genotype(Rng &rng) const {
    return decode(rng.next_below(size()));
}

Genotype SearchSpace::mutate(const Genotype &g, Rng &rng) const {
    auto resample = [&rng](const auto &values, auto current) {
        // Uniform over the values other than the current one.
        const std::size_t cur = static_cast<std::size_t>(
            std::find(values.begin(), values.end(), current) - values.begin());
        std::size_t pick = rng.next_below(values.size() - 1);
        if (pick >= cur) {
            ++pick;
        }
        return values[pick];
    };

    Genotype out = g;
    for (;;) {
        const int gene = static_cast<int>(rng.next_below(kNumGenes));
        // Genes with a single admissible value cannot change; redraw.
        switch (gene) {
        case 0:
            if (qubit_values.size() < 2) {
                continue;
            }
            out.num_qubits = resample(qubit_values, g.num_qubits);
            return out;
        case 1:
            if (encodings.size() < 2) {
                continue;
            }
            out.encoding = resample(encodings, g.encoding);
            return out;
        case 2:
        case 3:
        case 4:
        case 5:
            if (rot_axes.size() < 2) {
                continue;
            }
            out.rot_gates[gene - 2] = resample(rot_axes, g.rot_gates[gene - 2]);
            return out;
        case 6:
            if (entanglers.size() < 2) {
                continue;
            }
            out.entangler = resample(entanglers, g.entangler);
            return out;
        case 7:
            if (topologies.size() < 2) {
                continue;
            }
            out.topology = resample(topologies, g.topology);
            return out;
        default:
            if (depth_values.size() < 2) {
                continue;
            }
            out.depth = resample(depth_values, g.depth);
            return out;
        }
    }
}

std::pair<Genotype, Genotype> SearchSpace::crossover(const Genotype &a, const Genotype &b,
                                                     Rng &rng) const {
    Genotype x = a;
    Genotype y = b;
    auto maybe_swap = [&rng](auto &u, auto &v) {
        if (rng.next_double() < 0.5) {
            std::swap(u, v);
        }
    };
    maybe_swap(x.num_qubits, y.num_qubits);
    maybe_swap(x.encoding, y.encoding);
    for (int i = 0; i < kMaxLayers; ++i) {
        maybe_swap(x.rot_gates[i], y.rot_gates[i]);
    }
    maybe_swap(x.entangler, y.entangler);
    maybe_swap(x.topology, y.topology);
    maybe_swap(x.depth, y.depth);
    return {x, y};
}

std::uint64_t space_size() { return SearchSpace::full().size(); }

Genotype canonicalize(const Genotype &g) {
    Genotype out = g;
    for (int i = g.depth; i < kMaxLayers; ++i) {
        out.rot_gates[i] = RotAxis::kRx;
    }
    return out;
}

void validate(const Genotype &g) {
    if (g.num_qubits < 2 || g.num_qubits > 10) {
        throw std::invalid_argument("num_qubits must be in [2, 10], got " +
                                    std::to_string(g.num_qubits));
    }
    if (g.depth < 1 || g.depth > kMaxLayers) {
        throw std::invalid_argument("depth must be in [1, 4], got " + std::to_string(g.depth));
    }
}

std::string to_token(const Genotype &g) {
    std::ostringstream out;
    out << 'q' << g.num_qubits << '-' << (g.encoding == Encoding::kAngle ? "ang" : "amp") << '-';
    for (const RotAxis a : g.rot_gates) {
        out << axis_name(a);
    }
    out << '-' << (g.entangler == EntanglerKind::kCnot ? "cnot" : "cz") << '-'
        << (g.topology == Topology::kLinear ? "lin" : "circ") << '-' << 'd' << g.depth;
    return out.str();
}

Genotype parse_token(const std::string &token) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : token) {
        if (c == '-') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 6) {
        throw std::invalid_argument("genotype token '" + token +
                                    "': expected 6 '-'-separated fields, got " +
                                    std::to_string(parts.size()));
    }

    Genotype g;

    const std::string &q = parts[0];
    if (q.size() < 2 || q[0] != 'q' || q.find_first_not_of("0123456789", 1) != std::string::npos) {
        throw std::invalid_argument("genotype token: bad qubit field '" + q + "'");
    }
    g.num_qubits = std::stoi(q.substr(1));
    if (g.num_qubits < 2 || g.num_qubits > 10) {
        throw std::invalid_argument("genotype token: qubit count " +
                                    std::to_string(g.num_qubits) + " outside [2, 10]");
    }

    if (parts[1] == "ang") {
        g.encoding = Encoding::kAngle;
    } else if (parts[1] == "amp") {
        g.encoding = Encoding::kAmplitude;
    } else {
        throw std::invalid_argument("genotype token: bad encoding field '" + parts[1] + "'");
    }

    const std::string &rots = parts[2];
    if (rots.size() != 2 * kMaxLayers) {
        throw std::invalid_argument("genotype token: rotation field '" + rots +
                                    "' must hold exactly 4 gates");
    }
    for (int i = 0; i < kMaxLayers; ++i) {
        const std::string gate = rots.substr(2 * static_cast<std::size_t>(i), 2);
        if (gate == "Rx") {
            g.rot_gates[i] = RotAxis::kRx;
        } else if (gate == "Ry") {
            g.rot_gates[i] = RotAxis::kRy;
        } else if (gate == "Rz") {
            g.rot_gates[i] = RotAxis::kRz;
        } else {
            throw std::invalid_argument("genotype token: bad rotation gate '" + gate + "'");
        }
    }

    if (parts[3] == "cnot") {
        g.entangler = EntanglerKind::kCnot;
    } else if (parts[3] == "cz") {
        g.entangler = EntanglerKind::kCz;
    } else {
        throw std::invalid_argument("genotype token: bad entangler field '" + parts[3] + "'");
    }

    if (parts[4] == "lin") {
        g.topology = Topology::kLinear;
    } else if (parts[4] == "circ") {
        g.topology = Topology::kCircular;
    } else {
        throw std::invalid_argument("genotype token: bad topology field '" + parts[4] + "'");
    }

    const std::string &d = parts[5];
    if (d.size() != 2 || d[0] != 'd' || d[1] < '1' || d[1] > '4') {
        throw std::invalid_argument("genotype token: bad depth field '" + d + "'");
    }
    g.depth = d[1] - '0';
    return g;
}

} // namespace hqnas
