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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hqnas/qsim/kernels.hpp"

namespace hqnas::qsim::omp {

namespace {

// Reduction chunk size. Partials are computed per fixed chunk and combined in
// chunk order, so the floating-point result does not depend on thread count.
constexpr std::ptrdiff_t kChunk = 4096;

template <typename Partial>
double chunked_reduce(std::ptrdiff_t size, Partial partial_of_chunk) {
    const std::ptrdiff_t num_chunks = (size + kChunk - 1) / kChunk;
    std::vector<double> partials(static_cast<std::size_t>(num_chunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < num_chunks; ++c) {
        const std::ptrdiff_t begin = c * kChunk;
        const std::ptrdiff_t end = std::min(begin + kChunk, size);
        partials[static_cast<std::size_t>(c)] = partial_of_chunk(begin, end);
    }
    double acc = 0.0;
    for (const double p : partials) {
        acc += p;
    }
    return acc;
}

} // namespace

void apply_single_qubit(std::span<Complex> amps, int num_qubits, int qubit,
                        const GateMatrix2 &m) {
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t lo_mask = mask - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::ptrdiff_t pairs = std::ptrdiff_t{1} << (num_qubits - 1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < pairs; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        const std::size_t i0 = ((u & hi_mask) << 1) | (u & lo_mask);
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
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        if ((u & control_mask) && !(u & target_mask)) {
            std::swap(amps[u], amps[u | target_mask]);
        }
    }
}

void apply_cz(std::span<Complex> amps, int num_qubits, int control, int target) {
    (void)num_qubits;
    const std::size_t both = (std::size_t{1} << control) | (std::size_t{1} << target);
    const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        if ((u & both) == both) {
            amps[u] = -amps[u];
        }
    }
}

double expectation_z(std::span<const Complex> amps, int num_qubits, int qubit) {
    (void)num_qubits;
    const std::size_t mask = std::size_t{1} << qubit;
    return chunked_reduce(static_cast<std::ptrdiff_t>(amps.size()),
                          [amps, mask](std::ptrdiff_t begin, std::ptrdiff_t end) {
                              double acc = 0.0;
                              for (std::ptrdiff_t i = begin; i < end; ++i) {
                                  const std::size_t u = static_cast<std::size_t>(i);
                                  const double p = amps[u].real() * amps[u].real() +
                                                   amps[u].imag() * amps[u].imag();
                                  acc += (u & mask) ? -p : p;
                              }
                              return acc;
                          });
}

double squared_norm(std::span<const Complex> amps) {
    return chunked_reduce(static_cast<std::ptrdiff_t>(amps.size()),
                          [amps](std::ptrdiff_t begin, std::ptrdiff_t end) {
                              double acc = 0.0;
                              for (std::ptrdiff_t i = begin; i < end; ++i) {
                                  const std::size_t u = static_cast<std::size_t>(i);
                                  acc += amps[u].real() * amps[u].real() +
                                         amps[u].imag() * amps[u].imag();
                              }
                              return acc;
                          });
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    const double re = chunked_reduce(static_cast<std::ptrdiff_t>(a.size()),
                                     [a, b](std::ptrdiff_t begin, std::ptrdiff_t end) {
                                         double acc = 0.0;
                                         for (std::ptrdiff_t i = begin; i < end; ++i) {
                                             const std::size_t u = static_cast<std::size_t>(i);
                                             acc += a[u].real() * b[u].real() +
                                                    a[u].imag() * b[u].imag();
                                         }
                                         return acc;
                                     });
    const double im = chunked_reduce(static_cast<std::ptrdiff_t>(a.size()),
                                     [a, b](std::ptrdiff_t begin, std::ptrdiff_t end) {
                                         double acc = 0.0;
                                         for (std::ptrdiff_t i = begin; i < end; ++i) {
                                             const std::size_t u = static_cast<std::size_t>(i);
                                             acc += a[u].real() * b[u].imag() -
                                                    a[u].imag() * b[u].real();
                                         }
                                         return acc;
                                     });
    return {re, im};
}

} // namespace hqnas::qsim::omp
