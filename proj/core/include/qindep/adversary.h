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

#ifndef QINDEP_ADVERSARY_H
#define QINDEP_ADVERSARY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qindep/circuit.h"
#include "qindep/linalg.h"
#include "qindep/simulator.h"

namespace qindep {

/// Choice of the successful P outcome the attack steers to, and of the
/// M <-> E basis pairing. An empty pairing means the identity.
struct AdversaryConfig {
    std::uint64_t p_star = 0;
    std::vector<std::uint64_t> basis_pairing;

    /// p_star = smallest element of the success set, identity pairing.
    static AdversaryConfig for_circuit(const Circuit &circuit);

    std::vector<std::uint64_t> pairing_for(const SubsystemLayout &layout) const;
};

/// The maximally entangled target N * sum_k |k>_M |p_star>_P |pairing(k)>_E.
DenseVector build_target_state(const SubsystemLayout &layout, const AdversaryConfig &cfg);

/// The state that the setup itself carries into the target: V^-1 applied to
/// the target, where V = U (x) I_E.
DenseVector build_adversarial_initial(const Circuit &circuit, const AdversaryConfig &cfg);

/// The hand-written entangled initial state of the two-qubit case study:
/// amplitude 1/2 on (m,p,e) = 000, 010, 101, 111.
DenseVector case_study_initial();

struct SamplingOptions {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

struct SamplingSummary {
    std::string prng;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t successes = 0;
    /// Fraction of successful draws with m == pairing(e); 0 when none succeeded.
    double empirical_agreement = 0.0;
};

struct AuditReport {
    double success_probability = 0.0;
    /// P[m == pairing(e) | p in S].
    double agreement_probability = 0.0;
    /// I(M;E | p in S).
    double mutual_information_bits = 0.0;
    /// H_min(f(m,p) | E, p in S).
    double output_min_entropy_given_e_bits = 0.0;
    std::uint64_t p_star = 0;
    bool used_override = false;
    std::string circuit_digest;
    std::string index_convention;
    std::string version;
    std::optional<SamplingSummary> sampling;
};

struct AuditRun {
    AuditReport report;
    DenseVector initial;
    DenseVector final_state;
};

/// Runs the setup from the adversarial initial state (or from the override)
/// and measures how much the environment knows about the output, all
/// conditioned on success. Throws InvariantError when the success
/// probability is below 1e-12.
AuditRun audit_run(const Circuit &circuit, const AdversaryConfig &cfg,
                   const std::optional<DenseVector> &initial_override = std::nullopt,
                   const SamplingOptions &sampling = {});

AuditReport audit(const Circuit &circuit, const AdversaryConfig &cfg,
                  const std::optional<DenseVector> &initial_override = std::nullopt,
                  const SamplingOptions &sampling = {});

}  // namespace qindep

#endif
