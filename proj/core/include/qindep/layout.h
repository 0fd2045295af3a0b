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

#ifndef QINDEP_LAYOUT_H
#define QINDEP_LAYOUT_H

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qindep {

/// Default cap on M + P + E qubits (a 2^20 amplitude statevector).
inline constexpr std::size_t kDefaultMaxQubits = 20;

/// Identifier of the amplitude index convention, embedded in reports.
inline constexpr std::string_view kIndexConvention = "mpe-msb-v1";

enum class Register { M, P, E };

std::string_view register_name(Register reg);

/// Qubit counts of the measured register M, the projection register P and
/// the environment E.
///
/// Index convention: a basis state (m, p, e) lives at
///     m * 2^(p_qubits + e_qubits) + p * 2^e_qubits + e,
/// i.e. M is most significant, then P, then E. Within a register, wire 0 is
/// the most significant bit of that register's value. Globally the wires are
/// numbered M0..M(m-1), P0..P(p-1), E0..E(e-1), and global qubit q sits at bit
/// position (total_qubits - 1 - q) of the state index.
struct SubsystemLayout {
    std::size_t m_qubits = 0;
    std::size_t p_qubits = 0;
    std::size_t e_qubits = 0;

    std::size_t total_qubits() const noexcept {
        return m_qubits + p_qubits + e_qubits;
    }
    std::size_t setup_qubits() const noexcept {
        return m_qubits + p_qubits;
    }
    std::uint64_t m_dim() const noexcept {
        return std::uint64_t{1} << m_qubits;
    }
    std::uint64_t p_dim() const noexcept {
        return std::uint64_t{1} << p_qubits;
    }
    std::uint64_t e_dim() const noexcept {
        return std::uint64_t{1} << e_qubits;
    }
    std::uint64_t dim() const noexcept {
        return std::uint64_t{1} << total_qubits();
    }
    std::size_t qubits_of(Register reg) const noexcept;
    std::uint64_t dim_of(Register reg) const noexcept {
        return std::uint64_t{1} << qubits_of(reg);
    }

    std::uint64_t index(std::uint64_t m, std::uint64_t p, std::uint64_t e) const noexcept {
        return (m << (p_qubits + e_qubits)) | (p << e_qubits) | e;
    }

    std::size_t global_qubit(Register reg, std::size_t wire) const noexcept;
    /// Bit position of a wire inside the full M,P,E state index.
    std::size_t bit_position(Register reg, std::size_t wire) const noexcept {
        return total_qubits() - 1 - global_qubit(reg, wire);
    }

    /// Throws InputError for empty registers or E != M, ResourceError when the
    /// total exceeds max_qubits.
    void validate(std::size_t max_qubits = kDefaultMaxQubits) const;

    bool operator==(const SubsystemLayout &other) const = default;
};

}  // namespace qindep

#endif
