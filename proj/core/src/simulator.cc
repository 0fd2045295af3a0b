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

#include "qindep/simulator.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qindep/errors.h"
#include "qindep/prng.h"

namespace qindep {

namespace {

void require_dim(const DenseVector &state, const SubsystemLayout &layout) {
    if (state.dim() != layout.dim()) {
        throw InputError("state has dimension " + std::to_string(state.dim()) + " but the layout needs " +
                         std::to_string(layout.dim()));
    }
}

void require_unit_norm(const DenseVector &state) {
    double n = state.norm();
    if (std::abs(n - 1.0) > kStateTolerance) {
        throw InputError("state is not normalized (norm " + std::to_string(n) + ")");
    }
}

std::size_t register_shift(const SubsystemLayout &layout, Register reg) {
    switch (reg) {
        case Register::M:
            return layout.p_qubits + layout.e_qubits;
        case Register::P:
            return layout.e_qubits;
        case Register::E:
            return 0;
    }
    return 0;
}

/// Spreads the bits of x apart so that bit position `bit` is a zero.
inline std::size_t insert_zero(std::size_t x, std::size_t bit) {
    std::size_t low = x & ((std::size_t{1} << bit) - 1);
    return ((x >> bit) << (bit + 1)) | low;
}

void apply_one(std::span<Complex> a, std::size_t bit, GateKind kind, const DenseMatrix &g) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t dim = a.size();
    switch (kind) {
        case GateKind::X:
            for (std::size_t base = 0; base < dim; base += 2 * stride) {
                for (std::size_t i = base; i < base + stride; ++i) {
                    std::swap(a[i], a[i + stride]);
                }
            }
            return;
        case GateKind::Z:
            for (std::size_t base = 0; base < dim; base += 2 * stride) {
                for (std::size_t i = base; i < base + stride; ++i) {
                    a[i + stride] = -a[i + stride];
                }
            }
            return;
        default:
            break;
    }
    const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            Complex a0 = a[i];
            Complex a1 = a[i + stride];
            a[i] = g00 * a0 + g01 * a1;
            a[i + stride] = g10 * a0 + g11 * a1;
        }
    }
}

void apply_two(std::span<Complex> a, std::size_t bit0, std::size_t bit1, GateKind kind, const DenseMatrix &g) {
    const std::size_t lo = std::min(bit0, bit1);
    const std::size_t hi = std::max(bit0, bit1);
    const std::size_t m0 = std::size_t{1} << bit0;
    const std::size_t m1 = std::size_t{1} << bit1;
    const std::size_t groups = a.size() >> 2;

    switch (kind) {
        case GateKind::CNOT:
            for (std::size_t i = 0; i < groups; ++i) {
                std::size_t base = insert_zero(insert_zero(i, lo), hi);
                std::swap(a[base | m0], a[base | m0 | m1]);
            }
            return;
        case GateKind::CZ:
            for (std::size_t i = 0; i < groups; ++i) {
                std::size_t base = insert_zero(insert_zero(i, lo), hi);
                a[base | m0 | m1] = -a[base | m0 | m1];
            }
            return;
        case GateKind::SWAP:
            for (std::size_t i = 0; i < groups; ++i) {
                std::size_t base = insert_zero(insert_zero(i, lo), hi);
                std::swap(a[base | m0], a[base | m1]);
            }
            return;
        default:
            break;
    }

    Complex m[4][4];
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m[r][c] = g(r, c);
        }
    }
    for (std::size_t i = 0; i < groups; ++i) {
        std::size_t base = insert_zero(insert_zero(i, lo), hi);
        // Sub-index 2 * bit(wire0) + bit(wire1).
        const std::size_t idx[4] = {base, base | m1, base | m0, base | m0 | m1};
        Complex in[4] = {a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            a[idx[r]] = m[r][0] * in[0] + m[r][1] * in[1] + m[r][2] * in[2] + m[r][3] * in[3];
        }
    }
}

}  // namespace

JointDistribution::JointDistribution(SubsystemLayout layout, std::vector<double> probabilities)
    : layout_(layout), probs_(std::move(probabilities)) {
    if (probs_.size() != layout_.dim()) {
        throw InputError("distribution size does not match layout");
    }
}

OutcomeTriple JointDistribution::outcome_at(std::uint64_t index) const {
    return OutcomeTriple{
        index >> (layout_.p_qubits + layout_.e_qubits),
        (index >> layout_.e_qubits) & (layout_.p_dim() - 1),
        index & (layout_.e_dim() - 1),
    };
}

std::vector<std::pair<OutcomeTriple, double>> JointDistribution::support() const {
    std::vector<std::pair<OutcomeTriple, double>> out;
    for (std::uint64_t i = 0; i < probs_.size(); ++i) {
        if (probs_[i] > 0.0) {
            out.emplace_back(outcome_at(i), probs_[i]);
        }
    }
    return out;
}

double JointDistribution::total() const {
    double sum = 0.0;
    for (double p : probs_) {
        sum += p;
    }
    return sum;
}

DenseVector init_state(const SubsystemLayout &layout, std::uint64_t basis_index) {
    layout.validate(layout.total_qubits());
    return DenseVector::basis(layout.dim(), basis_index);
}

InitializedState init_state(const SubsystemLayout &layout, std::span<const Complex> amplitudes) {
    layout.validate(layout.total_qubits());
    if (amplitudes.size() != layout.dim()) {
        throw InputError("initial state has " + std::to_string(amplitudes.size()) + " amplitudes, layout needs " +
                         std::to_string(layout.dim()));
    }
    DenseVector v(std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
    double n = v.norm();
    if (!(n > 1e-9)) {
        throw InputError("initial state is the zero vector");
    }
    InitializedState out;
    out.renormalized = std::abs(n - 1.0) > kStateTolerance;
    for (Complex &a : v.amplitudes()) {
        a /= n;
    }
    out.state = std::move(v);
    return out;
}

void apply_gate(const SubsystemLayout &layout, const Gate &gate, std::span<Complex> amplitudes) {
    DenseMatrix g = gate.kind == GateKind::U1 || gate.kind == GateKind::U2 || gate.kind == GateKind::H
                        ? gate.matrix()
                        : DenseMatrix{};
    if (gate.wires.size() == 1) {
        apply_one(amplitudes, layout.bit_position(gate.wires[0].reg, gate.wires[0].index), gate.kind, g);
    } else {
        apply_two(amplitudes, layout.bit_position(gate.wires[0].reg, gate.wires[0].index),
                  layout.bit_position(gate.wires[1].reg, gate.wires[1].index), gate.kind, g);
    }
}

DenseVector run(const Circuit &circuit, DenseVector state) {
    require_dim(state, circuit.layout());
    for (const Gate &gate : circuit.gates()) {
        apply_gate(circuit.layout(), gate, state.amplitudes());
    }
    return state;
}

DenseVector run_inverse(const Circuit &circuit, DenseVector state) {
    return run(inverse_circuit(circuit), std::move(state));
}

JointDistribution measure_all(const DenseVector &state, const SubsystemLayout &layout) {
    require_dim(state, layout);
    require_unit_norm(state);
    std::vector<double> probs(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        double p = std::norm(state[i]);
        probs[i] = p > kProbabilityFloor ? p : 0.0;
    }
    return JointDistribution(layout, std::move(probs));
}

ConditionalState conditional_state(const DenseVector &state, const SubsystemLayout &layout, Register reg,
                                   std::uint64_t outcome) {
    require_dim(state, layout);
    require_unit_norm(state);
    if (outcome >= layout.dim_of(reg)) {
        throw InputError("outcome " + std::to_string(outcome) + " out of range for register " +
                         std::string(register_name(reg)));
    }
    const std::size_t shift = register_shift(layout, reg);
    const std::uint64_t mask = layout.dim_of(reg) - 1;
    std::vector<Complex> kept(state.dim());
    double prob = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (((i >> shift) & mask) == outcome) {
            kept[i] = state[i];
            prob += std::norm(state[i]);
        }
    }
    if (prob < kImpossibleOutcome) {
        throw InputError("impossible outcome " + std::to_string(outcome) + " on register " +
                         std::string(register_name(reg)));
    }
    double scale = 1.0 / std::sqrt(prob);
    for (Complex &a : kept) {
        a *= scale;
    }
    return ConditionalState{DenseVector(std::move(kept)), prob};
}

std::vector<OutcomeTriple> sample(const DenseVector &state, const SubsystemLayout &layout, std::size_t n,
                                  std::uint64_t seed) {
    if (n == 0) {
        throw InputError("sample count must be at least 1");
    }
    JointDistribution dist = measure_all(state, layout);
    std::span<const double> probs = dist.probabilities();
    std::vector<double> cdf(probs.size());
    double running = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cdf[i] = running;
        if (probs[i] > 0.0) {
            last_positive = i;
        }
    }
    Prng rng(seed);
    std::vector<OutcomeTriple> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double u = rng.uniform() * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t index = it == cdf.end() ? last_positive : static_cast<std::size_t>(it - cdf.begin());
        out.push_back(dist.outcome_at(index));
    }
    return out;
}

DenseMatrix reduced_density_matrix(const DenseVector &state, const SubsystemLayout &layout, Register reg) {
    require_dim(state, layout);
    const std::size_t shift = register_shift(layout, reg);
    const std::uint64_t d = layout.dim_of(reg);
    const std::uint64_t reg_mask = (d - 1) << shift;
    DenseMatrix rho(d, d);
    for (std::uint64_t rest = 0; rest < state.dim(); ++rest) {
        if (rest & reg_mask) {
            continue;
        }
        for (std::uint64_t a = 0; a < d; ++a) {
            Complex amp_a = state[rest | (a << shift)];
            if (amp_a == Complex{}) {
                continue;
            }
            for (std::uint64_t b = 0; b < d; ++b) {
                rho(a, b) += amp_a * std::conj(state[rest | (b << shift)]);
            }
        }
    }
    return rho;
}

}  // namespace qindep
