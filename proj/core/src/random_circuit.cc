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

#include "qindep/random_circuit.h"

#include <array>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace qindep {

namespace {

Wire pick_wire(const SubsystemLayout &layout, Prng &rng) {
    std::uint64_t q = rng.next_u64() % layout.setup_qubits();
    if (q < layout.m_qubits) {
        return Wire{Register::M, static_cast<std::size_t>(q)};
    }
    return Wire{Register::P, static_cast<std::size_t>(q - layout.m_qubits)};
}

}  // namespace

DenseMatrix random_unitary(std::size_t dim, Prng &rng) {
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto &col : cols) {
        for (Complex &z : col) {
            z = Complex(rng.normal(), rng.normal());
        }
    }
    // Modified Gram-Schmidt, run twice per column for orthogonality at 1e-15.
    for (std::size_t j = 0; j < dim; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj{};
                for (std::size_t i = 0; i < dim; ++i) {
                    proj += std::conj(cols[k][i]) * cols[j][i];
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    cols[j][i] -= proj * cols[k][i];
                }
            }
        }
        double n = 0.0;
        for (Complex z : cols[j]) {
            n += std::norm(z);
        }
        n = std::sqrt(n);
        for (Complex &z : cols[j]) {
            z /= n;
        }
    }
    DenseMatrix u(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

DenseVector random_state(std::size_t dim, Prng &rng) {
    std::vector<Complex> amps(dim);
    double n = 0.0;
    for (Complex &z : amps) {
        z = Complex(rng.normal(), rng.normal());
        n += std::norm(z);
    }
    n = std::sqrt(n);
    for (Complex &z : amps) {
        z /= n;
    }
    return DenseVector(std::move(amps));
}

Circuit random_circuit(const SubsystemLayout &layout, std::size_t gate_count, std::uint64_t seed) {
    static constexpr std::array<GateKind, 8> kKinds{GateKind::H,  GateKind::X,    GateKind::Z,  GateKind::CNOT,
                                                    GateKind::CZ, GateKind::SWAP, GateKind::U1, GateKind::U2};
    Prng rng(seed);
    std::vector<Gate> gates;
    gates.reserve(gate_count);
    while (gates.size() < gate_count) {
        GateKind kind = kKinds[rng.next_u64() % kKinds.size()];
        Gate g{kind, {pick_wire(layout, rng)}, std::nullopt};
        if (gate_arity(kind) == 2) {
            if (layout.setup_qubits() < 2) {
                continue;
            }
            Wire second = pick_wire(layout, rng);
            while (second == g.wires[0]) {
                second = pick_wire(layout, rng);
            }
            g.wires.push_back(second);
        }
        if (kind == GateKind::U1 || kind == GateKind::U2) {
            g.explicit_matrix = random_unitary(std::size_t{1} << gate_arity(kind), rng);
        }
        gates.push_back(std::move(g));
    }

    std::set<std::uint64_t> success;
    for (std::uint64_t p = 0; p < layout.p_dim(); ++p) {
        if (rng.uniform() < 0.5) {
            success.insert(p);
        }
    }
    if (success.empty()) {
        success.insert(rng.next_u64() % layout.p_dim());
    }

    OutputMap map = OutputMap::measured_value();
    if (rng.uniform() < 0.5) {
        OutputMap::Table table;
        for (std::uint64_t m = 0; m < layout.m_dim(); ++m) {
            for (std::uint64_t p : success) {
                table[{m, p}] = static_cast<std::int64_t>(rng.next_u64() % (2 * layout.m_dim())) - 1;
            }
        }
        map = OutputMap::table(std::move(table));
    }
    return Circuit(layout, std::move(gates), std::move(success), std::move(map), layout.total_qubits());
}

}  // namespace qindep
