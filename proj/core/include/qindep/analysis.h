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

#ifndef QINDEP_ANALYSIS_H
#define QINDEP_ANALYSIS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qindep {

/// Probability table p(x, y), row-major in x. Entries at or below 1e-15 are
/// stored as zero.
class BivariateDistribution {
   public:
    /// Throws InputError on negative entries or a total off 1 by more than 1e-12.
    BivariateDistribution(std::size_t x_dim, std::size_t y_dim, std::vector<double> probabilities);

    std::size_t x_dim() const noexcept {
        return x_dim_;
    }
    std::size_t y_dim() const noexcept {
        return y_dim_;
    }
    double operator()(std::size_t x, std::size_t y) const {
        return probs_[x * y_dim_ + y];
    }
    std::span<const double> probabilities() const noexcept {
        return probs_;
    }

    BivariateDistribution transposed() const;

   private:
    std::size_t x_dim_;
    std::size_t y_dim_;
    std::vector<double> probs_;
};

enum class Axis { X, Y };

std::vector<double> marginal(const BivariateDistribution &d, Axis axis);

/// Shannon entropy in bits.
double shannon_entropy(std::span<const double> probabilities);

/// I(X;Y) in bits, clamped at zero.
double mutual_information(const BivariateDistribution &d);

/// H_min(X|Y) = -log2 sum_y max_x p(x, y), in bits.
double min_entropy_given_y(const BivariateDistribution &d);

/// sum_x p(x, pairing[x]). pairing must be a permutation of 0..x_dim-1 and
/// the table must be square.
double agreement_probability(const BivariateDistribution &d, std::span<const std::uint64_t> pairing);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
};

/// Pearson independence statistic over the categories present in the
/// samples, with expected counts from the empirical marginals. Needs at least
/// two distinct x and two distinct y values.
ChiSquareResult chi_square_independence(std::span<const std::pair<std::uint64_t, std::uint64_t>> samples);

}  // namespace qindep

#endif
