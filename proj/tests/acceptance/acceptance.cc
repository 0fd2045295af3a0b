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

// Acceptance suite. One line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle.h"
#include "cli.h"
#include "qindep/adversary.h"
#include "qindep/circuit.h"
#include "qindep/circuit_format.h"
#include "qindep/linalg.h"
#include "qindep/prng.h"
#include "qindep/random_circuit.h"
#include "qindep/simulator.h"

namespace {

using namespace qindep;
using Clock = std::chrono::steady_clock;

constexpr double kFixedPointTol = 1e-12;
constexpr double kFixedPointMaxSeconds = 1e-3;
constexpr double kRegroupProbTol = 1e-12;
constexpr double kBellFidelityTol = 1e-12;
constexpr double kAdversaryTol = 1e-9;
constexpr double kCorpusMaxSeconds = 10.0;
constexpr double kHonestTol = 1e-12;
constexpr double kOracleTol = 1e-12;
constexpr std::size_t kOracleMaxQubits = 12;
constexpr std::uint64_t kSampleSeed = 42;
constexpr std::size_t kSampleCount = 100000;
constexpr double kMarginalTol = 0.01;
constexpr double kRoundTripTol = 1e-12;
constexpr double kAuditMaxSeconds = 5.0;
constexpr std::size_t kCorpusSize = 100;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CorpusEntry {
    Circuit circuit;
    std::uint64_t seed;
};

// Layouts 1/1/1 through 4/4/4 and gate counts 1..50 all appear.
std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < kCorpusSize; ++i) {
        std::size_t m = 1 + i % 4;
        std::size_t p = 1 + (i / 4) % 4;
        std::size_t gates = 1 + (i * 7) % 50;
        std::uint64_t seed = 5000 + i;
        out.push_back({random_circuit(SubsystemLayout{m, p, m}, gates, seed), seed});
    }
    return out;
}

const std::vector<CorpusEntry> &shared_corpus() {
    static const std::vector<CorpusEntry> c = corpus();
    return c;
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome fixed_point() {
    Circuit c = case_study_circuit();
    DenseVector alpha = case_study_initial();
    auto start = Clock::now();
    DenseVector out = run(c, alpha);
    double t = seconds_since(start);
    double r = phase_aligned_distance(out, alpha);
    return {r <= kFixedPointTol && t < kFixedPointMaxSeconds, fmt("residual=%.3g runtime=%.3gs", r, t)};
}

Outcome regrouping() {
    Circuit c = case_study_circuit();
    const SubsystemLayout &l = c.layout();
    DenseVector out = run(c, case_study_initial());
    const double h = 1.0 / std::sqrt(2.0);
    DenseVector bell(std::vector<Complex>{h, 0.0, 0.0, h});
    bool ok = true;
    std::string detail;
    for (std::uint64_t p = 0; p < 2; ++p) {
        ConditionalState cond = conditional_state(out, l, Register::P, p);
        std::vector<Complex> me(4);
        for (std::uint64_t m = 0; m < 2; ++m) {
            for (std::uint64_t e = 0; e < 2; ++e) {
                me[2 * m + e] = cond.state[l.index(m, p, e)];
            }
        }
        double f = fidelity(DenseVector(me), bell);
        ok = ok && std::abs(cond.probability - 0.5) <= kRegroupProbTol && f >= 1.0 - kBellFidelityTol;
        detail += fmt("p=%llu prob=%.17g fidelity=%.17g ", static_cast<unsigned long long>(p), cond.probability, f);
    }
    detail.pop_back();
    return {ok, detail};
}

Outcome adversary_corpus() {
    auto start = Clock::now();
    double worst_success = 0.0, worst_agree = 0.0, worst_mi = 0.0;
    for (const CorpusEntry &entry : corpus()) {
        AuditReport r = audit(entry.circuit, AdversaryConfig::for_circuit(entry.circuit));
        double m = static_cast<double>(entry.circuit.layout().m_qubits);
        worst_success = std::max(worst_success, std::abs(r.success_probability - 1.0));
        worst_agree = std::max(worst_agree, std::abs(r.agreement_probability - 1.0));
        worst_mi = std::max(worst_mi, std::abs(r.mutual_information_bits - m));
    }
    double t = seconds_since(start);
    bool ok = worst_success <= kAdversaryTol && worst_agree <= kAdversaryTol && worst_mi <= kAdversaryTol &&
              t < kCorpusMaxSeconds;
    return {ok, fmt("circuits=%zu max|success-1|=%.3g max|agreement-1|=%.3g max|MI-m|=%.3g runtime=%.3gs",
                    kCorpusSize, worst_success, worst_agree, worst_mi, t)};
}

Outcome honest_baseline() {
    double worst_mi = 0.0, worst_rho = 0.0;
    for (const CorpusEntry &entry : shared_corpus()) {
        const SubsystemLayout &l = entry.circuit.layout();
        Prng rng(entry.seed);
        DenseVector setup = random_state(std::uint64_t{1} << l.setup_qubits(), rng);
        DenseVector env = random_state(l.e_dim(), rng);
        DenseVector initial = kron(setup, env);
        AuditRun r = audit_run(entry.circuit, AdversaryConfig::for_circuit(entry.circuit), initial);
        worst_mi = std::max(worst_mi, r.report.mutual_information_bits);
        worst_rho = std::max(worst_rho, max_abs_diff(reduced_density_matrix(initial, l, Register::E),
                                                     reduced_density_matrix(r.final_state, l, Register::E)));
    }
    return {worst_mi <= kHonestTol && worst_rho <= kHonestTol,
            fmt("max MI=%.3g max|rho_E change|=%.3g", worst_mi, worst_rho)};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    std::size_t checked = 0;
    for (const CorpusEntry &entry : shared_corpus()) {
        const SubsystemLayout &l = entry.circuit.layout();
        if (l.total_qubits() > kOracleMaxQubits) {
            continue;
        }
        DenseMatrix u = compile_unitary(entry.circuit);
        Prng rng(entry.seed ^ 0x9e3779b97f4a7c15ULL);
        for (const DenseVector &s : {random_state(l.dim(), rng),
                                     build_adversarial_initial(entry.circuit,
                                                               AdversaryConfig::for_circuit(entry.circuit))}) {
            worst = std::max(worst, testing::max_entry_diff(run(entry.circuit, s),
                                                            testing::apply_setup_unitary(u, s, l)));
        }
        ++checked;
    }
    return {checked > 0 && worst <= kOracleTol, fmt("circuits=%zu max entry diff=%.3g", checked, worst)};
}

std::string sample_bytes(const std::vector<OutcomeTriple> &samples) {
    std::ostringstream out;
    for (const OutcomeTriple &t : samples) {
        out << t.m << ' ' << t.p << ' ' << t.e << '\n';
    }
    return out.str();
}

Outcome sampling() {
    Circuit c = case_study_circuit();
    DenseVector alpha = case_study_initial();
    std::vector<OutcomeTriple> a = sample(alpha, c.layout(), kSampleCount, kSampleSeed);
    std::vector<OutcomeTriple> b = sample(alpha, c.layout(), kSampleCount, kSampleSeed);
    std::size_t agree = 0, ones = 0;
    for (const OutcomeTriple &t : a) {
        agree += t.m == t.e;
        ones += t.m == 1;
    }
    double freq = static_cast<double>(ones) / kSampleCount;
    bool identical = sample_bytes(a) == sample_bytes(b);
    bool ok = agree == kSampleCount && std::abs(freq - 0.5) <= kMarginalTol && identical;
    return {ok, fmt("m=e in %zu/%zu P(m=1)=%.5f rerun %s", agree, kSampleCount, freq,
                    identical ? "identical" : "differs")};
}

std::string strip_timestamp(const std::string &s) {
    return std::regex_replace(s, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
}

std::string cli_output(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    if (cli::run(args, out, err) != 0) {
        return "error: " + err.str();
    }
    return out.str();
}

Outcome round_trips() {
    std::size_t format_failures = 0;
    double worst = 0.0;
    std::vector<Circuit> circuits{case_study_circuit()};
    for (const CorpusEntry &entry : shared_corpus()) {
        circuits.push_back(entry.circuit);
    }
    for (const Circuit &c : circuits) {
        std::string text = serialize(c);
        Circuit back = parse_circuit(text);
        if (!(back == c) || serialize(back) != text) {
            ++format_failures;
        }
        Prng rng(text.size());
        DenseVector s = random_state(c.layout().dim(), rng);
        worst = std::max(worst, testing::max_entry_diff(run_inverse(c, run(c, s)), s));
    }

    std::string dir = QINDEP_DATA_DIR;
    std::vector<std::vector<std::string>> commands{
        {"case-study"},
        {"audit", dir + "/heralded.qc", "--samples", "1000", "--seed", "3"},
        {"simulate", dir + "/case_study.qc", "--samples", "100", "--seed", "5"},
    };
    std::size_t json_failures = 0;
    for (const auto &cmd : commands) {
        std::string first = cli_output(cmd);
        if (first.starts_with("error") || strip_timestamp(first) != strip_timestamp(cli_output(cmd))) {
            ++json_failures;
        }
    }
    bool ok = format_failures == 0 && worst <= kRoundTripTol && json_failures == 0;
    return {ok, fmt("format mismatches=%zu max|inverse residual|=%.3g unstable reports=%zu", format_failures, worst,
                    json_failures)};
}

Outcome performance() {
    Circuit c = random_circuit(SubsystemLayout{6, 6, 6}, 100, 77);
    auto start = Clock::now();
    AuditRun r = audit_run(c, AdversaryConfig::for_circuit(c));
    double t = seconds_since(start);
    bool ok = t < kAuditMaxSeconds && std::abs(r.report.success_probability - 1.0) <= kAdversaryTol &&
              std::abs(r.report.mutual_information_bits - 6.0) <= kAdversaryTol;
    return {ok, fmt("amplitudes=%llu runtime=%.3gs MI=%.12g", static_cast<unsigned long long>(c.layout().dim()), t,
                    r.report.mutual_information_bits)};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {"AC1 case-study fixed point", fixed_point},
        {"AC2 regrouping into Bell pairs", regrouping},
        {"AC3 adversary on random corpus", adversary_corpus},
        {"AC4 honest product baseline", honest_baseline},
        {"AC5 gate-local vs dense oracle", oracle_equivalence},
        {"AC6 sampling determinism", sampling},
        {"AC7 round-trip contracts", round_trips},
        {"AC8 6/6/6 audit envelope", performance},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
