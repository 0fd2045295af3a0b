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

#include "qindep/adversary.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qindep/analysis.h"
#include "qindep/circuit_format.h"
#include "qindep/digest.h"
#include "qindep/errors.h"
#include "qindep/prng.h"
#include "qindep/version.h"

namespace qindep {

namespace {

constexpr double kMinSuccessProbability = 1e-12;

void require_success_outcome(const Circuit &circuit, const AdversaryConfig &cfg) {
    if (!circuit.is_success(cfg.p_star)) {
        throw InputError("p_star " + std::to_string(cfg.p_star) + " is not in the success set");
    }
}

}  // namespace

AdversaryConfig AdversaryConfig::for_circuit(const Circuit &circuit) {
    return AdversaryConfig{*circuit.success_set().begin(), {}};
}

std::vector<std::uint64_t> AdversaryConfig::pairing_for(const SubsystemLayout &layout) const {
    std::uint64_t d = layout.m_dim();
    if (basis_pairing.empty()) {
        std::vector<std::uint64_t> id(d);
        std::iota(id.begin(), id.end(), std::uint64_t{0});
        return id;
    }
    if (basis_pairing.size() != d) {
        throw InputError("basis pairing has " + std::to_string(basis_pairing.size()) + " entries, expected " +
                         std::to_string(d));
    }
    std::vector<bool> seen(d, false);
    for (std::uint64_t k : basis_pairing) {
        if (k >= d || seen[k]) {
            throw InputError("basis pairing is not a permutation");
        }
        seen[k] = true;
    }
    return basis_pairing;
}

DenseVector build_target_state(const SubsystemLayout &layout, const AdversaryConfig &cfg) {
    layout.validate(layout.total_qubits());
    if (cfg.p_star >= layout.p_dim()) {
        throw InputError("p_star " + std::to_string(cfg.p_star) + " out of range for " +
                         std::to_string(layout.p_qubits) + " P qubit(s)");
    }
    std::vector<std::uint64_t> pairing = cfg.pairing_for(layout);
    const double amp = 1.0 / std::sqrt(static_cast<double>(layout.m_dim()));
    DenseVector psi(layout.dim());
    for (std::uint64_t k = 0; k < layout.m_dim(); ++k) {
        psi[layout.index(k, cfg.p_star, pairing[k])] = amp;
    }
    return psi;
}

DenseVector build_adversarial_initial(const Circuit &circuit, const AdversaryConfig &cfg) {
    require_success_outcome(circuit, cfg);
    return run_inverse(circuit, build_target_state(circuit.layout(), cfg));
}

DenseVector case_study_initial() {
    const SubsystemLayout layout{1, 1, 1};
    DenseVector alpha(layout.dim());
    alpha[layout.index(0, 0, 0)] = 0.5;
    alpha[layout.index(0, 1, 0)] = 0.5;
    alpha[layout.index(1, 0, 1)] = 0.5;
    alpha[layout.index(1, 1, 1)] = 0.5;
    return alpha;
}

AuditRun audit_run(const Circuit &circuit, const AdversaryConfig &cfg, const std::optional<DenseVector> &initial_override,
                   const SamplingOptions &sampling) {
    const SubsystemLayout &layout = circuit.layout();
    require_success_outcome(circuit, cfg);
    const std::vector<std::uint64_t> pairing = cfg.pairing_for(layout);

    DenseVector initial;
    if (initial_override) {
        if (initial_override->dim() != layout.dim()) {
            throw InputError("initial state has dimension " + std::to_string(initial_override->dim()) +
                             ", layout needs " + std::to_string(layout.dim()));
        }
        if (std::abs(initial_override->norm() - 1.0) > kStateTolerance) {
            throw InputError("initial state is not normalized");
        }
        initial = *initial_override;
    } else {
        initial = build_adversarial_initial(circuit, cfg);
    }

    DenseVector final_state = run(circuit, initial);
    JointDistribution dist = measure_all(final_state, layout);

    const std::uint64_t md = layout.m_dim();
    const std::uint64_t ed = layout.e_dim();
    double success = 0.0;
    for (std::uint64_t m = 0; m < md; ++m) {
        for (std::uint64_t p : circuit.success_set()) {
            for (std::uint64_t e = 0; e < ed; ++e) {
                success += dist.probability(m, p, e);
            }
        }
    }
    if (success < kMinSuccessProbability) {
        throw InvariantError("adversary construction failed: success probability " + std::to_string(success));
    }

    // Distinct outputs of f over successful (m, p), in increasing order.
    std::vector<std::int64_t> outputs;
    for (std::uint64_t m = 0; m < md; ++m) {
        for (std::uint64_t p : circuit.success_set()) {
            outputs.push_back(circuit.output_map()(m, p));
        }
    }
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    auto output_slot = [&](std::int64_t f) {
        return static_cast<std::size_t>(std::lower_bound(outputs.begin(), outputs.end(), f) - outputs.begin());
    };

    std::vector<double> me(md * ed, 0.0);
    std::vector<double> fe(outputs.size() * ed, 0.0);
    for (std::uint64_t m = 0; m < md; ++m) {
        for (std::uint64_t p : circuit.success_set()) {
            std::size_t slot = output_slot(circuit.output_map()(m, p));
            for (std::uint64_t e = 0; e < ed; ++e) {
                double q = dist.probability(m, p, e) / success;
                me[m * ed + e] += q;
                fe[slot * ed + e] += q;
            }
        }
    }
    BivariateDistribution me_dist(md, ed, std::move(me));
    BivariateDistribution fe_dist(outputs.size(), ed, std::move(fe));

    AuditRun out;
    AuditReport &r = out.report;
    r.success_probability = std::clamp(success, 0.0, 1.0);
    r.agreement_probability = std::clamp(agreement_probability(me_dist, pairing), 0.0, 1.0);
    r.mutual_information_bits = mutual_information(me_dist);
    r.output_min_entropy_given_e_bits = min_entropy_given_y(fe_dist);
    r.p_star = cfg.p_star;
    r.used_override = initial_override.has_value();
    r.circuit_digest = content_digest(serialize(circuit));
    r.index_convention = std::string(kIndexConvention);
    r.version = std::string(kVersion);

    if (sampling.samples > 0) {
        std::vector<OutcomeTriple> draws = sample(final_state, layout, sampling.samples, sampling.seed);
        SamplingSummary s;
        s.prng = std::string(Prng::kName);
        s.seed = sampling.seed;
        s.samples = sampling.samples;
        std::size_t agree = 0;
        for (const OutcomeTriple &t : draws) {
            if (circuit.is_success(t.p)) {
                ++s.successes;
                if (t.e == pairing[t.m]) {
                    ++agree;
                }
            }
        }
        s.empirical_agreement = s.successes == 0 ? 0.0 : static_cast<double>(agree) / static_cast<double>(s.successes);
        r.sampling = s;
    }

    out.initial = std::move(initial);
    out.final_state = std::move(final_state);
    return out;
}

AuditReport audit(const Circuit &circuit, const AdversaryConfig &cfg, const std::optional<DenseVector> &initial_override,
                  const SamplingOptions &sampling) {
    return audit_run(circuit, cfg, initial_override, sampling).report;
}

}  // namespace qindep
