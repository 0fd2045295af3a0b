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

#ifndef QINDEP_RANDOM_CIRCUIT_H
#define QINDEP_RANDOM_CIRCUIT_H

#include <cstddef>
#include <cstdint>

#include "qindep/circuit.h"
#include "qindep/linalg.h"
#include "qindep/prng.h"

namespace qindep {

/// Haar-like unitary from Gram-Schmidt on a complex Gaussian matrix.
DenseMatrix random_unitary(std::size_t dim, Prng &rng);

/// Unit vector with complex Gaussian components.
DenseVector random_state(std::size_t dim, Prng &rng);

/// Seeded circuit over the full gate set, including explicit U1/U2 gates,
/// with a random nonempty success set and output map. Same seed, same circuit.
Circuit random_circuit(const SubsystemLayout &layout, std::size_t gate_count, std::uint64_t seed);

}  // namespace qindep

#endif
