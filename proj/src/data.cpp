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

#include "hqnas/data.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hqnas/errors.hpp"
#include "hqnas/rng.hpp"

namespace hqnas::data {

namespace {

std::vector<std::string> split_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

double parse_number(const std::string &cell, int row, const std::string &path) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(cell, &pos);
        if (pos != cell.size()) {
            throw std::invalid_argument(cell);
        }
        return value;
    } catch (const std::exception &) {
        throw DataError(path + ": row " + std::to_string(row) + ": non-numeric cell '" + cell +
                        "'");
    }
}

// Fisher-Yates with the deterministic Rng draws.
void shuffle_indices(std::vector<int> &indices, Rng &rng) {
    for (std::size_t i = indices.size(); i > 1; --i) {
        const std::size_t j = rng.next_below(i);
        std::swap(indices[i - 1], indices[j]);
    }
}

} // namespace

Dataset load_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open dataset file '" + path + "'");
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(path + ": empty file, expected a header row");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    const std::vector<std::string> header = split_line(line);
    if (header.size() < 2 || header.back() != "label") {
        throw DataError(path + ": header must end with a 'label' column");
    }
    const int num_features = static_cast<int>(header.size()) - 1;

    Dataset ds;
    ds.name = std::filesystem::path(path).stem().string();
    ds.num_features = num_features;
    std::vector<double> raw_labels;

    int row = 1; // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            throw DataError(path + ": row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(cells.size()));
        }
        for (int f = 0; f < num_features; ++f) {
            const double v = parse_number(cells[static_cast<std::size_t>(f)], row, path);
            if (!std::isfinite(v)) {
                throw DataError(path + ": row " + std::to_string(row) + ": non-finite feature");
            }
            ds.features.push_back(v);
        }
        const double label = parse_number(cells.back(), row, path);
        if (label != std::floor(label)) {
            throw DataError(path + ": row " + std::to_string(row) + ": label '" + cells.back() +
                            "' is not an integer");
        }
        raw_labels.push_back(label);
    }
    ds.num_samples = static_cast<int>(raw_labels.size());
    if (ds.num_samples == 0) {
        throw DataError(path + ": no data rows");
    }

    // Re-index labels densely from 0, preserving sorted order of raw values.
    std::map<double, int> dense;
    for (const double l : raw_labels) {
        dense.emplace(l, 0);
    }
    int next = 0;
    for (auto &[raw, idx] : dense) {
        idx = next++;
    }
    ds.num_classes = next;
    ds.labels.reserve(raw_labels.size());
    for (const double l : raw_labels) {
        ds.labels.push_back(dense[l]);
    }
    return ds;
}

DatasetSplit stratified_split(const Dataset &dataset, double test_fraction, std::uint64_t seed) {
    if (test_fraction <= 0.0 || test_fraction >= 1.0) {
        throw DataError("test_fraction must be in (0, 1), got " + std::to_string(test_fraction));
    }

    std::vector<std::vector<int>> by_class(static_cast<std::size_t>(dataset.num_classes));
    for (int i = 0; i < dataset.num_samples; ++i) {
        by_class[static_cast<std::size_t>(dataset.labels[static_cast<std::size_t>(i)])].push_back(
            i);
    }

    DatasetSplit split;
    Rng rng(seed);
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        std::vector<int> &members = by_class[c];
        if (members.size() < 2) {
            throw DataError("class " + std::to_string(c) + " has " +
                            std::to_string(members.size()) +
                            " samples; need at least 2 to split");
        }
        shuffle_indices(members, rng);
        std::size_t test_count = static_cast<std::size_t>(
            std::floor(test_fraction * static_cast<double>(members.size()) + 0.5));
        test_count = std::clamp<std::size_t>(test_count, 1, members.size() - 1);
        split.test_indices.insert(split.test_indices.end(), members.begin(),
                                  members.begin() + static_cast<std::ptrdiff_t>(test_count));
        split.train_indices.insert(split.train_indices.end(),
                                   members.begin() + static_cast<std::ptrdiff_t>(test_count),
                                   members.end());
    }
    std::sort(split.train_indices.begin(), split.train_indices.end());
    std::sort(split.test_indices.begin(), split.test_indices.end());

    // Standardization statistics from the train rows only.
    split.feature_mean.assign(static_cast<std::size_t>(dataset.num_features), 0.0);
    split.feature_stddev.assign(static_cast<std::size_t>(dataset.num_features), 0.0);
    const double train_count = static_cast<double>(split.train_indices.size());
    for (const int i : split.train_indices) {
        const auto row = dataset.row(i);
        for (int f = 0; f < dataset.num_features; ++f) {
            split.feature_mean[static_cast<std::size_t>(f)] += row[static_cast<std::size_t>(f)];
        }
    }
    for (double &m : split.feature_mean) {
        m /= train_count;
    }
    for (const int i : split.train_indices) {
        const auto row = dataset.row(i);
        for (int f = 0; f < dataset.num_features; ++f) {
            const double d =
                row[static_cast<std::size_t>(f)] - split.feature_mean[static_cast<std::size_t>(f)];
            split.feature_stddev[static_cast<std::size_t>(f)] += d * d;
        }
    }
    for (double &s : split.feature_stddev) {
        s = std::sqrt(s / train_count);
    }
    return split;
}

Dataset standardize(const Dataset &dataset, const DatasetSplit &split) {
    Dataset out = dataset;
    for (int i = 0; i < out.num_samples; ++i) {
        for (int f = 0; f < out.num_features; ++f) {
            double &x =
                out.features[static_cast<std::size_t>(i) * out.num_features + f];
            const double s = split.feature_stddev[static_cast<std::size_t>(f)];
            x = s < 1e-12 ? 0.0 : (x - split.feature_mean[static_cast<std::size_t>(f)]) / s;
        }
    }
    return out;
}

Dataset synth_blobs(int num_classes, int samples_per_class, int num_features, double separation,
                    std::uint64_t seed) {
    if (num_classes <= 0 || samples_per_class <= 0 || num_features <= 0) {
        throw DataError("synth_blobs arguments must be positive");
    }
    Dataset ds;
    ds.name = "blobs";
    ds.num_classes = num_classes;
    ds.num_features = num_features;
    ds.num_samples = num_classes * samples_per_class;

    Rng rng(seed);
    std::vector<double> centers(static_cast<std::size_t>(num_classes) * num_features);
    for (double &c : centers) {
        c = rng.next_gaussian() * separation;
    }
    for (int c = 0; c < num_classes; ++c) {
        for (int s = 0; s < samples_per_class; ++s) {
            for (int f = 0; f < num_features; ++f) {
                const double center = centers[static_cast<std::size_t>(c) * num_features + f];
                ds.features.push_back(center + rng.next_gaussian());
            }
            ds.labels.push_back(c);
        }
    }
    return ds;
}

} // namespace hqnas::data
