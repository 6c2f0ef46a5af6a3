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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hqnas::data {

/**
 * @brief In-memory classification dataset with dense integer labels.
 */
struct Dataset {
    std::string name;
    int num_samples = 0;
    int num_features = 0;
    int num_classes = 0;
    std::vector<double> features; // row-major num_samples x num_features
    std::vector<int> labels;

    std::span<const double> row(int i) const {
        return {features.data() + static_cast<std::size_t>(i) * num_features,
                static_cast<std::size_t>(num_features)};
    }
};

/**
 * @brief Train/test partition plus the train-only standardization statistics.
 */
struct DatasetSplit {
    std::vector<int> train_indices;
    std::vector<int> test_indices;
    std::vector<double> feature_mean;   // from train rows only
    std::vector<double> feature_stddev; // population stddev from train rows only
};

/**
 * @brief Loads a CSV with header "f0,f1,...,label" and integer class labels.
 *
 * Raw label values are re-indexed densely from 0, preserving their sorted
 * order. Throws DataError naming the offending row for missing files, ragged
 * rows, or non-numeric cells.
 */
Dataset load_csv(const std::string &path);

/**
 * @brief Per-class shuffled split; deterministic given seed.
 *
 * Each class contributes round(test_fraction * class_size) test samples,
 * clamped so both sides keep at least one. Classes with fewer than two
 * samples are an error.
 */
DatasetSplit stratified_split(const Dataset &dataset, double test_fraction, std::uint64_t seed);

/**
 * @brief Z-scores all rows using the split's train statistics.
 *
 * Zero-variance features map to 0. Returns a transformed copy; the split's
 * index lists remain valid for it.
 */
Dataset standardize(const Dataset &dataset, const DatasetSplit &split);

/// Gaussian clusters at seeded random centers scaled by separation.
Dataset synth_blobs(int num_classes, int samples_per_class, int num_features, double separation,
                    std::uint64_t seed);

} // namespace hqnas::data
