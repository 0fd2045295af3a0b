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

#ifndef QINDEP_CIRCUIT_H
#define QINDEP_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "qindep/layout.h"
#include "qindep/linalg.h"

namespace qindep {

/// Circuits larger than this (M + P qubits) are not compiled to a dense matrix.
inline constexpr std::size_t kMaxCompileQubits = 12;

enum class GateKind { H, X, Z, CNOT, CZ, SWAP, U1, U2 };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);

struct Wire {
    Register reg = Register::M;
    std::size_t index = 0;

    bool operator==(const Wire &other) const = default;
};

/// One gate on the setup wires. For a two-wire gate the matrix row index is
/// 2 * bit(wires[0]) + bit(wires[1]); CNOT's control is wires[0].
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<Wire> wires;
    std::optional<DenseMatrix> explicit_matrix;  // U1 / U2 only

    DenseMatrix matrix() const;
    Gate adjoint() const;

    bool operator==(const Gate &other) const = default;
};

/// Throws InputError unless the gate is well formed for the layout: right
/// arity, distinct wires inside M or P (never E) and a unitary explicit matrix
/// of the right size when the kind takes one.
void validate_gate(const SubsystemLayout &layout, const Gate &gate);

/// The pre-agreed function from raw outcomes (m, p) to the generated number.
/// Either the shorthand f(m, p) = m or an explicit table.
class OutputMap {
   public:
    using Table = std::map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t>;

    static OutputMap measured_value();
    static OutputMap table(Table entries);

    bool is_measured_value() const noexcept {
        return measured_value_;
    }
    const Table &entries() const noexcept {
        return entries_;
    }
    std::int64_t operator()(std::uint64_t m, std::uint64_t p) const;

    bool operator==(const OutputMap &other) const = default;

   private:
    bool measured_value_ = true;
    Table entries_;
};

/// An RNG setup: the gate list realizing U on M and P, the success set S of P
/// outcomes and the output map f. Immutable and validated on construction.
class Circuit {
   public:
    Circuit(SubsystemLayout layout, std::vector<Gate> gates, std::set<std::uint64_t> success_set,
            OutputMap output_map, std::size_t max_qubits = kDefaultMaxQubits);

    const SubsystemLayout &layout() const noexcept {
        return layout_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    const std::set<std::uint64_t> &success_set() const noexcept {
        return success_set_;
    }
    const OutputMap &output_map() const noexcept {
        return output_map_;
    }
    bool is_success(std::uint64_t p) const {
        return success_set_.contains(p);
    }

    bool operator==(const Circuit &other) const = default;

   private:
    SubsystemLayout layout_;
    std::vector<Gate> gates_;
    std::set<std::uint64_t> success_set_;
    OutputMap output_map_;
};

/// Reversed gate list with every gate replaced by its adjoint.
Circuit inverse_circuit(const Circuit &circuit);

/// Dense unitary on M (x) P, built by applying the gates in order.
/// Throws ResourceError when M + P exceeds max_setup_qubits.
DenseMatrix compile_unitary(const Circuit &circuit, std::size_t max_setup_qubits = kMaxCompileQubits);

/// The H(M0), CNOT(M0 -> P0), H(M0) setup with S = {0, 1} and f(m, p) = m.
Circuit case_study_circuit();

}  // namespace qindep

#endif
