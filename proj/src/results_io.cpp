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

#include "hqnas/results_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hqnas/errors.hpp"
#include "hqnas/moo.hpp"

namespace hqnas {

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

moo::Objectives row_objectives(const ResultsRow &row) {
    // Round accuracy through its CSV form so flags survive a write/read cycle.
    const double acc = std::stod(format_accuracy(row.accuracy));
    return {1.0 - acc, static_cast<double>(row.total_flops)};
}

std::ofstream open_for_write(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write file '" + path + "'");
    }
    return out;
}

} // namespace

std::string format_accuracy(double accuracy) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", accuracy);
    return buf;
}

void assign_pareto_flags(std::vector<ResultsRow> &rows) {
    std::vector<moo::Objectives> objs;
    objs.reserve(rows.size());
    for (const ResultsRow &row : rows) {
        objs.push_back(row_objectives(row));
    }
    for (ResultsRow &row : rows) {
        row.is_pareto = false;
    }
    for (const int i : moo::pareto_filter(objs)) {
        rows[static_cast<std::size_t>(i)].is_pareto = true;
    }
}

std::vector<ResultsRow> pareto_rows(std::span<const ResultsRow> rows) {
    std::vector<moo::Objectives> objs;
    objs.reserve(rows.size());
    for (const ResultsRow &row : rows) {
        objs.push_back(row_objectives(row));
    }
    std::vector<ResultsRow> front;
    for (const int i : moo::pareto_filter(objs)) {
        front.push_back(rows[static_cast<std::size_t>(i)]);
    }
    std::stable_sort(front.begin(), front.end(), [](const ResultsRow &a, const ResultsRow &b) {
        return a.total_flops < b.total_flops;
    });
    return front;
}

void write_results_csv(const std::string &path, std::span<const ResultsRow> rows) {
    std::ofstream out = open_for_write(path);
    out << kResultsHeader << '\n';
    for (const ResultsRow &row : rows) {
        out << row.genotype << ',' << format_accuracy(row.accuracy) << ',' << row.classical_flops
            << ',' << row.quantum_flops << ',' << row.total_flops << ','
            << (row.is_pareto ? 1 : 0) << ',' << row.generation << ',' << row.seed << '\n';
    }
}

std::vector<ResultsRow> read_results_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open results file '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(path + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kResultsHeader) {
        throw DataError(path + ": row 1: unexpected header '" + line + "'");
    }

    std::vector<ResultsRow> rows;
    int row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> cells = split_csv(line);
        if (cells.size() != 8) {
            throw DataError(path + ": row " + std::to_string(row_number) + ": expected 8 fields, got " +
                            std::to_string(cells.size()));
        }
        try {
            ResultsRow row;
            row.genotype = cells[0];
            row.accuracy = std::stod(cells[1]);
            row.classical_flops = std::stoull(cells[2]);
            row.quantum_flops = std::stoull(cells[3]);
            row.total_flops = std::stoull(cells[4]);
            row.is_pareto = std::stoi(cells[5]) != 0;
            row.generation = std::stoi(cells[6]);
            row.seed = std::stoull(cells[7]);
            rows.push_back(std::move(row));
        } catch (const std::exception &) {
            throw DataError(path + ": row " + std::to_string(row_number) + ": malformed cell");
        }
    }
    return rows;
}

void write_generations_csv(const std::string &path, std::span<const moo::GenerationStats> stats) {
    std::ofstream out = open_for_write(path);
    out << "generation,evaluations,front_size,hypervolume,best_accuracy,min_total_flops_at_best\n";
    char buf[64];
    for (const moo::GenerationStats &s : stats) {
        std::snprintf(buf, sizeof(buf), "%.10g", s.hypervolume);
        out << s.generation << ',' << s.evaluations << ',' << s.front_size << ',' << buf << ','
            << format_accuracy(1.0 - s.best_o1) << ','
            << static_cast<std::uint64_t>(s.min_o2_at_best_o1) << '\n';
    }
}

void write_scatter_svg(const std::string &path, std::span<const ResultsRow> rows, FlopsView view) {
    const char *view_label = view == FlopsView::kClassical ? "classical FLOPs"
                             : view == FlopsView::kQuantum ? "quantum FLOPs"
                                                           : "total FLOPs";
    auto flops_of = [view](const ResultsRow &row) {
        switch (view) {
        case FlopsView::kClassical:
            return row.classical_flops;
        case FlopsView::kQuantum:
            return row.quantum_flops;
        default:
            return row.total_flops;
        }
    };

    // Log-domain x range padded to the enclosing integer decades.
    double log_min = 0.0;
    double log_max = 1.0;
    if (!rows.empty()) {
        log_min = moo::kInfinity;
        log_max = -moo::kInfinity;
        for (const ResultsRow &row : rows) {
            const double lf = std::log10(static_cast<double>(std::max<std::uint64_t>(1, flops_of(row))));
            log_min = std::min(log_min, lf);
            log_max = std::max(log_max, lf);
        }
        log_min = std::floor(log_min);
        log_max = std::ceil(log_max);
        if (log_max - log_min < 1.0) {
            log_max = log_min + 1.0;
        }
    }

    constexpr double kWidth = 800.0;
    constexpr double kHeight = 600.0;
    constexpr double kMarginLeft = 70.0;
    constexpr double kMarginRight = 20.0;
    constexpr double kMarginTop = 40.0;
    constexpr double kMarginBottom = 50.0;
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;

    auto x_of = [&](std::uint64_t flops) {
        const double lf = std::log10(static_cast<double>(std::max<std::uint64_t>(1, flops)));
        return kMarginLeft + (lf - log_min) / (log_max - log_min) * plot_w;
    };
    auto y_of = [&](double accuracy) { return kMarginTop + (1.0 - accuracy) * plot_h; };

    auto star_points = [](double cx, double cy, double r) {
        std::ostringstream pts;
        for (int k = 0; k < 10; ++k) {
            const double radius = k % 2 == 0 ? r : 0.45 * r;
            const double angle = -M_PI / 2.0 + k * M_PI / 5.0;
            pts << (k ? " " : "") << cx + radius * std::cos(angle) << ','
                << cy + radius * std::sin(angle);
        }
        return pts.str();
    };

    std::ofstream out = open_for_write(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "  <text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">accuracy vs "
        << view_label << "</text>\n";

    // Axes.
    out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
        << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";

    // x ticks at integer decades.
    for (int decade = static_cast<int>(log_min); decade <= static_cast<int>(log_max); ++decade) {
        const double x = kMarginLeft + (decade - log_min) / (log_max - log_min) * plot_w;
        out << "  <line x1=\"" << x << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << x
            << "\" y2=\"" << kMarginTop + plot_h + 6 << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 22
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">1e"
            << decade << "</text>\n";
    }
    // y ticks every 0.2.
    for (int i = 0; i <= 5; ++i) {
        const double acc = i / 5.0;
        const double y = y_of(acc);
        out << "  <line x1=\"" << kMarginLeft - 6 << "\" y1=\"" << y << "\" x2=\"" << kMarginLeft
            << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        char label[16];
        std::snprintf(label, sizeof(label), "%.1f", acc);
        out << "  <text x=\"" << kMarginLeft - 10 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << label
            << "</text>\n";
    }
    out << "  <text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << view_label
        << " (log scale)</text>\n";
    out << "  <text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << kMarginTop + plot_h / 2 << ")\">test accuracy</text>\n";

    // One marker per row: dots for candidates, stars for Pareto members.
    for (const ResultsRow &row : rows) {
        const double x = x_of(flops_of(row));
        const double y = y_of(row.accuracy);
        if (row.is_pareto) {
            out << "  <polygon points=\"" << star_points(x, y, 7.0)
                << "\" fill=\"red\" stroke=\"darkred\"><title>" << row.genotype
                << "</title></polygon>\n";
        } else {
            out << "  <circle cx=\"" << x << "\" cy=\"" << y
                << "\" r=\"3\" fill=\"steelblue\" fill-opacity=\"0.6\"><title>" << row.genotype
                << "</title></circle>\n";
        }
    }
    out << "</svg>\n";
}

} // namespace hqnas
