// Copyright 2026 The qindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qindep/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "qindep/errors.h"

namespace qindep {

namespace {

constexpr double kFloor = 1e-15;
constexpr double kSumTolerance = 1e-12;

// Clamps roundoff below zero, including -0.0, to +0.0.
double nonnegative(double v) {
    return v > 0.0 ? v : 0.0;
}

}  // namespace

BivariateDistribution::BivariateDistribution(std::size_t x_dim, std::size_t y_dim, std::vector<double> probabilities)
    : x_dim_(x_dim), y_dim_(y_dim), probs_(std::move(probabilities)) {
    if (x_dim_ == 0 || y_dim_ == 0) {
        throw InputError("distribution dimensions must be positive");
    }
    if (probs_.size() != x_dim_ * y_dim_) {
        throw InputError("distribution has " + std::to_string(probs_.size()) + " entries, expected " +
                         std::to_string(x_dim_ * y_dim_));
    }
    double sum = 0.0;
    for (double &p : probs_) {
        if (!std::isfinite(p) || p < -kFloor) {
            throw InputError("distribution has a negative or non-finite entry");
        }
        if (p <= kFloor) {
            p = 0.0;
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw InputError("distribution sums to " + std::to_string(sum) + ", not 1");
    }
}

BivariateDistribution BivariateDistribution::transposed() const {
    std::vector<double> t(probs_.size());
    for (std::size_t x = 0; x < x_dim_; ++x) {
        for (std::size_t y = 0; y < y_dim_; ++y) {
            t[y * x_dim_ + x] = (*this)(x, y);
        }
    }
    return BivariateDistribution(y_dim_, x_dim_, std::move(t));
}

std::vector<double> marginal(const BivariateDistribution &d, Axis axis) {
    std::vector<double> out(axis == Axis::X ? d.x_dim() : d.y_dim(), 0.0);
    for (std::size_t x = 0; x < d.x_dim(); ++x) {
        for (std::size_t y = 0; y < d.y_dim(); ++y) {
            out[axis == Axis::X ? x : y] += d(x, y);
        }
    }
    return out;
}

double shannon_entropy(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > kFloor) {
            h -= p * std::log2(p);
        }
    }
    return nonnegative(h);
}

double mutual_information(const BivariateDistribution &d) {
    std::vector<double> px = marginal(d, Axis::X);
    std::vector<double> py = marginal(d, Axis::Y);
    double mi = 0.0;
    for (std::size_t x = 0; x < d.x_dim(); ++x) {
        for (std::size_t y = 0; y < d.y_dim(); ++y) {
            double p = d(x, y);
            if (p > kFloor) {
                mi += p * std::log2(p / (px[x] * py[y]));
            }
        }
    }
    return nonnegative(mi);
}

double min_entropy_given_y(const BivariateDistribution &d) {
    double guess = 0.0;
    for (std::size_t y = 0; y < d.y_dim(); ++y) {
        double best = 0.0;
        for (std::size_t x = 0; x < d.x_dim(); ++x) {
            best = std::max(best, d(x, y));
        }
        guess += best;
    }
    return nonnegative(-std::log2(guess));
}

double agreement_probability(const BivariateDistribution &d, std::span<const std::uint64_t> pairing) {
    if (d.x_dim() != d.y_dim()) {
        throw InputError("agreement needs a square table, got " + std::to_string(d.x_dim()) + "x" +
                         std::to_string(d.y_dim()));
    }
    if (pairing.size() != d.x_dim()) {
        throw InputError("pairing has " + std::to_string(pairing.size()) + " entries, expected " +
                         std::to_string(d.x_dim()));
    }
    std::vector<bool> seen(pairing.size(), false);
    for (std::uint64_t y : pairing) {
        if (y >= pairing.size() || seen[y]) {
            throw InputError("pairing is not a permutation");
        }
        seen[y] = true;
    }
    double sum = 0.0;
    for (std::size_t x = 0; x < d.x_dim(); ++x) {
        sum += d(x, pairing[x]);
    }
    return sum;
}

ChiSquareResult chi_square_independence(std::span<const std::pair<std::uint64_t, std::uint64_t>> samples) {
    if (samples.empty()) {
        throw InputError("chi-square test needs samples");
    }
    std::map<std::uint64_t, double> rows;
    std::map<std::uint64_t, double> cols;
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> cells;
    for (const auto &s : samples) {
        rows[s.first] += 1.0;
        cols[s.second] += 1.0;
        cells[s] += 1.0;
    }
    if (rows.size() < 2 || cols.size() < 2) {
        throw InputError("chi-square test needs at least two categories on each axis");
    }
    const double n = static_cast<double>(samples.size());
    double stat = 0.0;
    for (const auto &[x, rx] : rows) {
        for (const auto &[y, cy] : cols) {
            double expected = rx * cy / n;
            auto it = cells.find({x, y});
            double observed = it == cells.end() ? 0.0 : it->second;
            double diff = observed - expected;
            stat += diff * diff / expected;
        }
    }
    return ChiSquareResult{stat, (rows.size() - 1) * (cols.size() - 1)};
}

}  // namespace qindep
