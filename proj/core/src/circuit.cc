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

#include "qindep/circuit.h"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qindep/errors.h"

namespace qindep {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 8> kGateNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::Z, "Z"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::U1, "U1"},
    {GateKind::U2, "U2"},
}};

bool takes_explicit_matrix(GateKind kind) {
    return kind == GateKind::U1 || kind == GateKind::U2;
}

std::string wire_label(const Wire &w) {
    return std::string(register_name(w.reg)) + std::to_string(w.index);
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::U1:
            return 1;
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::U2:
            return 2;
    }
    return 0;
}

DenseMatrix Gate::matrix() const {
    const double s = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::H:
            return DenseMatrix::from_rows({{s, s}, {s, -s}});
        case GateKind::X:
            return DenseMatrix::from_rows({{0, 1}, {1, 0}});
        case GateKind::Z:
            return DenseMatrix::from_rows({{1, 0}, {0, -1}});
        case GateKind::CNOT:
            return DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
        case GateKind::CZ:
            return DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
        case GateKind::SWAP:
            return DenseMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
        case GateKind::U1:
        case GateKind::U2:
            if (!explicit_matrix) {
                throw InputError(std::string(gate_name(kind)) + " gate without a matrix");
            }
            return *explicit_matrix;
    }
    throw InvariantError("unhandled gate kind");
}

Gate Gate::adjoint() const {
    Gate out = *this;
    if (explicit_matrix) {
        out.explicit_matrix = qindep::adjoint(*explicit_matrix);
    }
    return out;
}

void validate_gate(const SubsystemLayout &layout, const Gate &gate) {
    std::string name(gate_name(gate.kind));
    if (gate.wires.size() != gate_arity(gate.kind)) {
        throw InputError(name + " takes " + std::to_string(gate_arity(gate.kind)) + " wire(s), got " +
                         std::to_string(gate.wires.size()));
    }
    for (std::size_t i = 0; i < gate.wires.size(); ++i) {
        const Wire &w = gate.wires[i];
        if (w.reg == Register::E) {
            throw InputError("gate touches environment wire");
        }
        if (w.index >= layout.qubits_of(w.reg)) {
            throw InputError("wire " + wire_label(w) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.wires[j] == w) {
                throw InputError("duplicate wire " + wire_label(w) + " in " + name);
            }
        }
    }
    if (takes_explicit_matrix(gate.kind)) {
        if (!gate.explicit_matrix) {
            throw InputError(name + " needs an explicit matrix");
        }
        std::size_t dim = std::size_t{1} << gate_arity(gate.kind);
        const DenseMatrix &m = *gate.explicit_matrix;
        if (m.rows() != dim || m.cols() != dim) {
            throw InputError(name + " matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
        }
        if (!is_unitary(m)) {
            throw InputError("explicit matrix is not unitary");
        }
    } else if (gate.explicit_matrix) {
        throw InputError(name + " does not take a matrix");
    }
}

OutputMap OutputMap::measured_value() {
    return OutputMap{};
}

OutputMap OutputMap::table(Table entries) {
    OutputMap out;
    out.measured_value_ = false;
    out.entries_ = std::move(entries);
    return out;
}

std::int64_t OutputMap::operator()(std::uint64_t m, std::uint64_t p) const {
    if (measured_value_) {
        return static_cast<std::int64_t>(m);
    }
    auto it = entries_.find({m, p});
    if (it == entries_.end()) {
        throw InputError("output map has no entry for m=" + std::to_string(m) + " p=" + std::to_string(p));
    }
    return it->second;
}

Circuit::Circuit(SubsystemLayout layout, std::vector<Gate> gates, std::set<std::uint64_t> success_set,
                 OutputMap output_map, std::size_t max_qubits)
    : layout_(layout), gates_(std::move(gates)), success_set_(std::move(success_set)),
      output_map_(std::move(output_map)) {
    layout_.validate(max_qubits);
    for (const Gate &g : gates_) {
        validate_gate(layout_, g);
    }
    if (success_set_.empty()) {
        throw InputError("empty success set");
    }
    for (std::uint64_t p : success_set_) {
        if (p >= layout_.p_dim()) {
            throw InputError("success outcome " + std::to_string(p) + " out of range for " +
                             std::to_string(layout_.p_qubits) + " P qubit(s)");
        }
    }
    if (!output_map_.is_measured_value()) {
        for (const auto &[key, value] : output_map_.entries()) {
            if (key.first >= layout_.m_dim()) {
                throw InputError("output map entry m=" + std::to_string(key.first) + " out of range");
            }
            if (!success_set_.contains(key.second)) {
                throw InputError("output map entry p=" + std::to_string(key.second) + " is not a success outcome");
            }
        }
        std::uint64_t expected = layout_.m_dim() * success_set_.size();
        if (output_map_.entries().size() != expected) {
            for (std::uint64_t m = 0; m < layout_.m_dim(); ++m) {
                for (std::uint64_t p : success_set_) {
                    if (!output_map_.entries().contains({m, p})) {
                        throw InputError("output map is not total: missing m=" + std::to_string(m) +
                                         " p=" + std::to_string(p));
                    }
                }
            }
        }
    }
}

Circuit inverse_circuit(const Circuit &circuit) {
    std::vector<Gate> gates;
    gates.reserve(circuit.gates().size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        gates.push_back(it->adjoint());
    }
    return Circuit(circuit.layout(), std::move(gates), circuit.success_set(), circuit.output_map(),
                   circuit.layout().total_qubits());
}

DenseMatrix compile_unitary(const Circuit &circuit, std::size_t max_setup_qubits) {
    const SubsystemLayout &layout = circuit.layout();
    std::size_t n = layout.setup_qubits();
    if (n > max_setup_qubits) {
        throw ResourceError("cannot compile a dense unitary on " + std::to_string(n) + " setup qubits, maximum is " +
                            std::to_string(max_setup_qubits));
    }
    std::size_t dim = std::size_t{1} << n;
    DenseMatrix u = DenseMatrix::identity(dim);

    // Row r of (G (x) I) U mixes the rows of U that agree with r outside the
    // gate's bits: new_U(r, :) = sum_c g(sub(r), sub(c)) U(c, :).
    for (const Gate &gate : circuit.gates()) {
        DenseMatrix g = gate.matrix();
        std::size_t k = gate.wires.size();
        std::vector<std::size_t> bits(k);
        std::size_t mask = 0;
        for (std::size_t i = 0; i < k; ++i) {
            bits[i] = n - 1 - layout.global_qubit(gate.wires[i].reg, gate.wires[i].index);
            mask |= std::size_t{1} << bits[i];
        }
        auto sub_index = [&](std::size_t index) {
            std::size_t s = 0;
            for (std::size_t i = 0; i < k; ++i) {
                s = (s << 1) | ((index >> bits[i]) & 1);
            }
            return s;
        };
        auto deposit = [&](std::size_t s) {
            std::size_t index = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if ((s >> (k - 1 - i)) & 1) {
                    index |= std::size_t{1} << bits[i];
                }
            }
            return index;
        };
        DenseMatrix next(dim, dim);
        std::size_t sub_dim = g.rows();
        for (std::size_t r = 0; r < dim; ++r) {
            std::size_t sr = sub_index(r);
            std::size_t rest = r & ~mask;
            for (std::size_t sc = 0; sc < sub_dim; ++sc) {
                Complex coeff = g(sr, sc);
                if (coeff == Complex{}) {
                    continue;
                }
                std::size_t c = rest | deposit(sc);
                for (std::size_t col = 0; col < dim; ++col) {
                    next(r, col) += coeff * u(c, col);
                }
            }
        }
        u = std::move(next);
    }
    return u;
}

Circuit case_study_circuit() {
    std::vector<Gate> gates{
        Gate{GateKind::H, {{Register::M, 0}}, std::nullopt},
        Gate{GateKind::CNOT, {{Register::M, 0}, {Register::P, 0}}, std::nullopt},
        Gate{GateKind::H, {{Register::M, 0}}, std::nullopt},
    };
    return Circuit(SubsystemLayout{1, 1, 1}, std::move(gates), {0, 1}, OutputMap::measured_value());
}

}  // namespace qindep
