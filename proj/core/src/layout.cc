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

#include "qindep/layout.h"

#include <string>

#include "qindep/errors.h"

namespace qindep {

std::string_view register_name(Register reg) {
    switch (reg) {
        case Register::M:
            return "M";
        case Register::P:
            return "P";
        case Register::E:
            return "E";
    }
    return "?";
}

std::size_t SubsystemLayout::qubits_of(Register reg) const noexcept {
    switch (reg) {
        case Register::M:
            return m_qubits;
        case Register::P:
            return p_qubits;
        case Register::E:
            return e_qubits;
    }
    return 0;
}

std::size_t SubsystemLayout::global_qubit(Register reg, std::size_t wire) const noexcept {
    switch (reg) {
        case Register::M:
            return wire;
        case Register::P:
            return m_qubits + wire;
        case Register::E:
            return m_qubits + p_qubits + wire;
    }
    return 0;
}

void SubsystemLayout::validate(std::size_t max_qubits) const {
    if (m_qubits == 0) {
        throw InputError("layout needs at least one M qubit");
    }
    if (p_qubits == 0) {
        throw InputError("layout needs at least one P qubit");
    }
    if (e_qubits != m_qubits) {
        throw InputError("environment must match the measured register: E=" + std::to_string(e_qubits) +
                         " but M=" + std::to_string(m_qubits));
    }
    // Guard against shift overflow before comparing with the configured cap.
    if (total_qubits() > max_qubits || total_qubits() > 62) {
        throw ResourceError("layout has " + std::to_string(total_qubits()) + " qubits, maximum is " +
                            std::to_string(max_qubits));
    }
}

}  // namespace qindep
