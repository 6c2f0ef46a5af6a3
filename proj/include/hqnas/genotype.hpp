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

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hqnas/rng.hpp"

namespace hqnas {

enum class Encoding { kAngle, kAmplitude };
enum class RotAxis { kRx, kRy, kRz };
enum class EntanglerKind { kCnot, kCz };
enum class Topology { kLinear, kCircular };

inline constexpr int kMaxLayers = 4;

/**
 * @brief One point of the architecture search space.
 *
 * Fixed-length chromosome: qubit count, data encoding, one rotation-axis gene
 * per potential variational layer, entangler kind, entanglement topology, and
 * the number of active layers. Rotation genes at positions >= depth are
 * carried through variation operators for crossover compatibility but do not
 * influence the built circuit.
 */
struct Genotype {
    int num_qubits = 2;
    Encoding encoding = Encoding::kAngle;
    std::array<RotAxis, kMaxLayers> rot_gates{RotAxis::kRx, RotAxis::kRx, RotAxis::kRx,
                                              RotAxis::kRx};
    EntanglerKind entangler = EntanglerKind::kCnot;
    Topology topology = Topology::kLinear;
    int depth = 1;

    bool operator==(const Genotype &) const = default;
};

/**
 * @brief Declared gene ranges, enumeration order, and variation mechanics.
 *
 * The default space is 9 x 2 x 3^4 x 2 x 2 x 4 = 23,328 chromosomes. decode()
 * and encode() form a mixed-radix bijection with genes ordered
 * (qubits, encoding, rot[0..3], entangler, topology, depth), most significant
 * first. Restricted spaces (fewer values per gene) are supported for tests.
 */
struct SearchSpace {
    std::vector<int> qubit_values;
    std::vector<Encoding> encodings;
    std::vector<RotAxis> rot_axes;
    std::vector<EntanglerKind> entanglers;
    std::vector<Topology> topologies;
    std::vector<int> depth_values;

    static SearchSpace full();

    /// Product of all gene-range sizes.
    std::uint64_t size() const;

    /// Mixed-radix decode; throws std::out_of_range unless 0 <= index < size().
    Genotype decode(std::uint64_t index) const;

    /// Inverse of decode; throws std::invalid_argument if g is not in the space.
    std::uint64_t encode(const Genotype &g) const;

    bool contains(const Genotype &g) const;

    Genotype random_genotype(Rng &rng) const;

    /// Resamples exactly one uniformly chosen gene to a different value.
    Genotype mutate(const Genotype &g, Rng &rng) const;

    /// Per-gene uniform exchange: each gene swapped with probability 0.5.
    std::pair<Genotype, Genotype> crossover(const Genotype &a, const Genotype &b, Rng &rng) const;
};

/// Convenience alias for SearchSpace::full().size().
std::uint64_t space_size();

/**
 * @brief Resets inert rotation genes (positions >= depth) to Rx.
 *
 * Two genotypes build the same circuit iff their canonical forms are equal.
 */
Genotype canonicalize(const Genotype &g);

/// Throws std::invalid_argument naming the offending field if g is out of range.
void validate(const Genotype &g);

/**
 * @brief Canonical text token, e.g. "q4-amp-RyRzRxRx-cz-circ-d2".
 *
 * Grammar: q<2-10>-(ang|amp)-(Rx|Ry|Rz){4}-(cnot|cz)-(lin|circ)-d<1-4>.
 */
std::string to_token(const Genotype &g);

/// Parses a token; throws std::invalid_argument naming the offending field.
Genotype parse_token(const std::string &token);

} // namespace hqnas
