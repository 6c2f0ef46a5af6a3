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

#include "hqnas/search.hpp"

#include <algorithm>

namespace hqnas {

moo::Objectives hv_reference_for(const SearchSpace &space, int input_dim, int num_classes,
                                 FlopsModel model) {
    std::uint64_t max_total = 0;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const Genotype g = space.decode(i);
        const std::uint64_t total =
            circuit_flops(g, model) + classical_flops(g, input_dim, num_classes);
        max_total = std::max(max_total, total);
    }
    return {1.0, 1.1 * static_cast<double>(max_total)};
}

} // namespace hqnas
