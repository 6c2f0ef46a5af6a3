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

#include <complex>
#include <cstddef>
#include <vector>

namespace hqnas::qsim {

using Complex = std::complex<double>;

/**
 * @brief Dense n-qubit pure state: 2^n complex amplitudes with unit L2 norm.
 *
 * Qubit q addresses bit q of the basis-state index; qubit 0 is the
 * least-significant bit.
 */
struct StateVector {
    int num_qubits = 0;
    std::vector<Complex> amps;

    StateVector() = default;
    explicit StateVector(int n) : num_qubits(n), amps(std::size_t{1} << n) {}

    static StateVector zero_state(int n) {
        StateVector s(n);
        s.amps[0] = 1.0;
        return s;
    }

    std::size_t size() const { return amps.size(); }
};

} // namespace hqnas::qsim
