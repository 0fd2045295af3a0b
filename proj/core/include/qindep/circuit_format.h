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

#ifndef QINDEP_CIRCUIT_FORMAT_H
#define QINDEP_CIRCUIT_FORMAT_H

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>

#include "qindep/circuit.h"

namespace qindep {

/// Line-oriented circuit text:
///
///     layout M=1 P=1 E=1
///     H M0
///     CNOT M0 P0
///     U1 M0 [1,0 0,0; 0,0 0,1]
///     success {0,1}
///     output m                       # or: map m=<int> p=<int> -> <int>
///
/// '#' starts a comment. The layout line must come first. Errors are
/// ParseError with the offending line; a layout over max_qubits is a
/// ResourceError.
Circuit parse_circuit(std::string_view text, std::size_t max_qubits = kDefaultMaxQubits);
Circuit parse_circuit(std::istream &in, std::size_t max_qubits = kDefaultMaxQubits);

/// Canonical text for a circuit. parse_circuit(serialize(c)) == c and
/// serialize is a fixed point under that round trip.
std::string serialize(const Circuit &circuit);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

}  // namespace qindep

#endif
