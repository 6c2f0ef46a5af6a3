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

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace hqnas {

/**
 * @brief Deterministic pseudo-random stream.
 *
 * mt19937_64 output is fully specified by the standard; the helpers below
 * replace std::*_distribution, whose mappings differ between standard library
 * implementations. Two runs with the same seed produce the same draws on any
 * platform.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in [0, n), n > 0. Rejection keeps the result unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Box-Muller transform.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        while (u1 <= 0.0) {
            u1 = next_double();
        }
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double two_pi_u2 = 2.0 * M_PI * u2;
        spare_ = r * std::sin(two_pi_u2);
        have_spare_ = true;
        return r * std::cos(two_pi_u2);
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/**
 * @brief Platform-stable 64-bit FNV-1a hash of (seed, token, generation).
 *
 * Used to derive per-candidate training seeds that do not depend on the order
 * in which candidates are scheduled for evaluation.
 */
inline std::uint64_t stable_hash(std::uint64_t seed, std::string_view token,
                                 std::uint64_t generation) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    for (int i = 0; i < 8; ++i) {
        mix(static_cast<std::uint8_t>(seed >> (8 * i)));
    }
    for (const char c : token) {
        mix(static_cast<std::uint8_t>(c));
    }
    for (int i = 0; i < 8; ++i) {
        mix(static_cast<std::uint8_t>(generation >> (8 * i)));
    }
    return h;
}

} // namespace hqnas
