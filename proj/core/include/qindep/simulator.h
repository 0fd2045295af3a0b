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

#ifndef QINDEP_SIMULATOR_H
#define QINDEP_SIMULATOR_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qindep/circuit.h"
#include "qindep/layout.h"
#include "qindep/linalg.h"

namespace qindep {

/// Probabilities at or below this are stored as exactly zero.
inline constexpr double kProbabilityFloor = 1e-15;
/// Conditioning on an outcome less likely than this is rejected.
inline constexpr double kImpossibleOutcome = 1e-12;

struct OutcomeTriple {
    std::uint64_t m = 0;
    std::uint64_t p = 0;
    std::uint64_t e = 0;

    auto operator<=>(const OutcomeTriple &other) const = default;
};

/// Exact Born-rule table over (m, p, e), stored densely in state-index order
/// (which is lexicographic in (m, p, e)).
class JointDistribution {
   public:
    JointDistribution(SubsystemLayout layout, std::vector<double> probabilities);

    const SubsystemLayout &layout() const noexcept {
        return layout_;
    }
    double probability(std::uint64_t m, std::uint64_t p, std::uint64_t e) const {
        return probs_[layout_.index(m, p, e)];
    }
    double probability(const OutcomeTriple &t) const {
        return probability(t.m, t.p, t.e);
    }
    std::span<const double> probabilities() const noexcept {
        return probs_;
    }
    OutcomeTriple outcome_at(std::uint64_t index) const;
    /// Nonzero entries in lexicographic order.
    std::vector<std::pair<OutcomeTriple, double>> support() const;
    double total() const;

   private:
    SubsystemLayout layout_;
    std::vector<double> probs_;
};

DenseVector init_state(const SubsystemLayout &layout, std::uint64_t basis_index);

struct InitializedState {
    DenseVector state;
    /// True when the supplied amplitudes were off unit norm by more than kStateTolerance.
    bool renormalized = false;
};

/// Normalizes an explicit amplitude list. Throws InputError on a wrong
/// length, non-finite entries or a norm at or below 1e-9.
InitializedState init_state(const SubsystemLayout &layout, std::span<const Complex> amplitudes);

/// Applies the circuit to the M and P wires only; E is never touched and
/// U (x) I_E is never built.
DenseVector run(const Circuit &circuit, DenseVector state);
DenseVector run_inverse(const Circuit &circuit, DenseVector state);

/// In-place gate application on a full M,P,E amplitude array.
void apply_gate(const SubsystemLayout &layout, const Gate &gate, std::span<Complex> amplitudes);

JointDistribution measure_all(const DenseVector &state, const SubsystemLayout &layout);

struct ConditionalState {
    DenseVector state;
    double probability = 0.0;
};

/// Projects one register onto a computational-basis outcome and renormalizes.
/// The measured register stays in the state, in the observed basis state.
ConditionalState conditional_state(const DenseVector &state, const SubsystemLayout &layout, Register reg,
                                   std::uint64_t outcome);

/// n independent draws from measure_all(state) using Prng(seed) and
/// inverse-CDF lookup in lexicographic (m, p, e) order.
std::vector<OutcomeTriple> sample(const DenseVector &state, const SubsystemLayout &layout, std::size_t n,
                                  std::uint64_t seed);

/// Reduced density matrix of one register, tracing out the other two.
DenseMatrix reduced_density_matrix(const DenseVector &state, const SubsystemLayout &layout, Register reg);

}  // namespace qindep

#endif
