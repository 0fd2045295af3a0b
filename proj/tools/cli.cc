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

#include "cli.h"

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qindep/adversary.h"
#include "qindep/circuit_format.h"
#include "qindep/digest.h"
#include "qindep/errors.h"
#include "qindep/simulator.h"
#include "report.h"

namespace qindep::cli {

namespace {

enum class Format { Json, Csv, Text };

struct CommonOptions {
    std::string format = "json";
    std::string out_path;
    std::size_t max_qubits = kDefaultMaxQubits;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

Format parse_format(const std::string &s) {
    if (s == "json") {
        return Format::Json;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "text") {
        return Format::Text;
    }
    throw InputError("unknown format '" + s + "'");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Amplitude file: whitespace-separated entries "re,im" or "re"; '#' comments.
std::vector<Complex> parse_amplitudes(const std::string &text, const std::string &origin) {
    std::vector<Complex> amps;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            std::size_t comma = tok.find(',');
            try {
                std::size_t used = 0;
                double re = std::stod(tok.substr(0, comma), &used);
                if (used != (comma == std::string::npos ? tok.size() : comma)) {
                    throw std::invalid_argument(tok);
                }
                double im = 0.0;
                if (comma != std::string::npos) {
                    std::string rest = tok.substr(comma + 1);
                    im = std::stod(rest, &used);
                    if (used != rest.size()) {
                        throw std::invalid_argument(tok);
                    }
                }
                amps.emplace_back(re, im);
            } catch (const std::logic_error &) {
                throw InputError(origin + ":" + std::to_string(line_no) + ": bad amplitude '" + tok + "'");
            }
        }
    }
    return amps;
}

struct InitialState {
    DenseVector state;
    bool renormalized = false;
    std::string description;
};

InitialState load_initial(const std::string &spec, const SubsystemLayout &layout) {
    if (spec.starts_with("basis:")) {
        std::string digits = spec.substr(6);
        std::uint64_t index = 0;
        try {
            std::size_t used = 0;
            index = std::stoull(digits, &used);
            if (used != digits.size()) {
                throw std::invalid_argument(digits);
            }
        } catch (const std::logic_error &) {
            throw InputError("bad basis index in '" + spec + "'");
        }
        return InitialState{init_state(layout, index), false, spec};
    }
    std::vector<Complex> amps = parse_amplitudes(read_file(spec), spec);
    InitializedState s = init_state(layout, amps);
    return InitialState{std::move(s.state), s.renormalized, "file:" + spec};
}

void emit(const CommonOptions &opts, const std::string &body, std::ostream &out) {
    if (opts.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write '" + opts.out_path + "'");
    }
    f << body;
}

std::string csv_rows(const JointDistribution &dist, const std::string &prefix) {
    std::string out;
    for (const auto &[t, p] : dist.support()) {
        out += prefix + std::to_string(t.m) + "," + std::to_string(t.p) + "," + std::to_string(t.e) + "," +
               format_double(p) + "\n";
    }
    return out;
}

std::string text_audit(const AuditReport &r) {
    std::ostringstream s;
    s << "  success_probability:             " << format_double(r.success_probability) << "\n"
      << "  agreement_probability:           " << format_double(r.agreement_probability) << "\n"
      << "  mutual_information_bits:         " << format_double(r.mutual_information_bits) << "\n"
      << "  output_min_entropy_given_e_bits: " << format_double(r.output_min_entropy_given_e_bits) << "\n";
    if (r.sampling) {
        s << "  sampled " << r.sampling->samples << " draws (" << r.sampling->prng << ", seed " << r.sampling->seed
          << "): " << r.sampling->successes << " successes, empirical agreement "
          << format_double(r.sampling->empirical_agreement) << "\n";
    }
    return s.str();
}

std::string text_distribution(const JointDistribution &dist) {
    std::ostringstream s;
    for (const auto &[t, p] : dist.support()) {
        s << "  m=" << t.m << " p=" << t.p << " e=" << t.e << "  " << format_double(p) << "\n";
    }
    return s.str();
}

// ---------------------------------------------------------------------------
// case-study

std::string cmd_case_study(const CommonOptions &opts) {
    const Format format = parse_format(opts.format);
    const Circuit circuit = case_study_circuit();
    const SubsystemLayout layout = circuit.layout();
    const AdversaryConfig cfg = AdversaryConfig::for_circuit(circuit);

    struct Row {
        std::string name;
        std::string initial;
        AuditRun run;
        JointDistribution dist;
    };
    auto make_row = [&](std::string name, std::string initial, std::optional<DenseVector> override_state) {
        AuditRun r = audit_run(circuit, cfg, override_state);
        JointDistribution d = measure_all(r.final_state, layout);
        return Row{std::move(name), std::move(initial), std::move(r), std::move(d)};
    };
    std::vector<Row> rows;
    rows.push_back(make_row("honest-product", "basis:0", init_state(layout, 0)));
    rows.push_back(make_row("entangled-preset", "preset:case-study", case_study_initial()));
    rows.push_back(make_row("constructed", "adversarial:p_star=0", std::nullopt));

    const DenseVector alpha0 = case_study_initial();
    const DenseVector alpha = run(circuit, alpha0);
    Json checks;
    checks["fixed_point_residual"] = phase_aligned_distance(alpha, alpha0);
    for (std::uint64_t p = 0; p < 2; ++p) {
        ConditionalState c = conditional_state(alpha, layout, Register::P, p);
        DenseVector bell = build_target_state(layout, AdversaryConfig{p, {}});
        checks["conditional_probability_p" + std::to_string(p)] = c.probability;
        checks["bell_fidelity_p" + std::to_string(p)] = fidelity(c.state, bell);
    }
    checks["constructed_target_residual"] =
        phase_aligned_distance(rows[2].run.final_state, build_target_state(layout, cfg));

    if (format == Format::Csv) {
        std::string out = "row,m,p,e,probability\n";
        for (const Row &r : rows) {
            out += csv_rows(r.dist, r.name + ",");
        }
        return out;
    }
    if (format == Format::Text) {
        std::ostringstream s;
        s << "case study: H(M0) CNOT(M0,P0) H(M0), success {0,1}, output m\n";
        for (const Row &r : rows) {
            s << "\n[" << r.name << "] initial " << r.initial << "\n" << text_audit(r.run.report) << "  distribution:\n"
              << text_distribution(r.dist);
        }
        s << "\nchecks:\n";
        for (auto it = checks.begin(); it != checks.end(); ++it) {
            s << "  " << it.key() << ": " << format_double(it.value().get<double>()) << "\n";
        }
        return s.str();
    }
    Json j;
    j["manifest"] =
        manifest_json(Manifest{"case-study", content_digest(serialize(circuit)), std::nullopt, current_timestamp()});
    Json jrows = Json::array();
    for (const Row &r : rows) {
        Json jr;
        jr["name"] = r.name;
        jr["initial"] = r.initial;
        jr["distribution"] = distribution_json(r.dist);
        jr["audit"] = audit_json(r.run.report);
        jrows.push_back(std::move(jr));
    }
    j["rows"] = std::move(jrows);
    j["checks"] = std::move(checks);
    return dump_json(j);
}

// ---------------------------------------------------------------------------
// audit

struct AuditResult {
    std::string path;
    Json json;
    std::string text;
    std::string csv;
};

AuditResult audit_one(const std::string &path, const CommonOptions &opts, const std::optional<std::uint64_t> &p_star) {
    const std::string bytes = read_file(path);
    const Circuit circuit = parse_circuit(bytes, opts.max_qubits);
    AdversaryConfig cfg = AdversaryConfig::for_circuit(circuit);
    if (p_star) {
        cfg.p_star = *p_star;
    }
    AuditRun r = audit_run(circuit, cfg, std::nullopt, SamplingOptions{opts.samples, opts.seed});
    const JointDistribution dist = measure_all(r.final_state, circuit.layout());

    Json checks;
    checks["target_residual"] = phase_aligned_distance(r.final_state, build_target_state(circuit.layout(), cfg));
    checks["norm_residual"] = std::abs(r.final_state.norm() - 1.0);
    checks["distribution_sum_residual"] = std::abs(dist.total() - 1.0);

    AuditResult out;
    out.path = path;
    std::optional<std::uint64_t> seed;
    if (opts.samples > 0) {
        seed = opts.seed;
    }
    out.json["manifest"] = manifest_json(Manifest{"audit", content_digest(bytes), seed, current_timestamp()});
    out.json["distribution"] = distribution_json(dist);
    out.json["audit"] = audit_json(r.report);
    out.json["checks"] = checks;

    std::ostringstream t;
    const SubsystemLayout &l = circuit.layout();
    t << "audit " << path << " (M=" << l.m_qubits << " P=" << l.p_qubits << " E=" << l.e_qubits << ", "
      << circuit.gates().size() << " gates, p_star=" << cfg.p_star << ")\n"
      << text_audit(r.report) << "  target_residual: " << format_double(checks["target_residual"].get<double>())
      << "\n";
    out.text = t.str();
    out.csv = csv_rows(dist, "");
    return out;
}

std::string cmd_audit(const std::vector<std::string> &paths, const CommonOptions &opts,
                      const std::optional<std::uint64_t> &p_star, bool batch) {
    const Format format = parse_format(opts.format);
    if (paths.size() > 1 && !batch) {
        throw InputError("several circuit files need --batch");
    }
    std::vector<AuditResult> results;
    if (batch && paths.size() > 1) {
        std::vector<std::future<AuditResult>> jobs;
        for (const std::string &p : paths) {
            jobs.push_back(std::async(std::launch::async, audit_one, p, std::cref(opts), std::cref(p_star)));
        }
        for (auto &job : jobs) {
            results.push_back(job.get());
        }
    } else {
        for (const std::string &p : paths) {
            results.push_back(audit_one(p, opts, p_star));
        }
    }

    if (format == Format::Csv) {
        std::string out = batch ? "file,m,p,e,probability\n" : "m,p,e,probability\n";
        for (const AuditResult &r : results) {
            if (!batch) {
                out += r.csv;
                continue;
            }
            std::istringstream lines(r.csv);
            std::string line;
            while (std::getline(lines, line)) {
                out += r.path + "," + line + "\n";
            }
        }
        return out;
    }
    if (format == Format::Text) {
        std::string out;
        for (const AuditResult &r : results) {
            out += r.text;
        }
        return out;
    }
    if (!batch) {
        return dump_json(results.front().json);
    }
    Json arr = Json::array();
    for (AuditResult &r : results) {
        arr.push_back(std::move(r.json));
    }
    return dump_json(arr);
}

// ---------------------------------------------------------------------------
// simulate

std::string cmd_simulate(const std::string &path, const std::string &initial_spec, const CommonOptions &opts) {
    const Format format = parse_format(opts.format);
    const std::string bytes = read_file(path);
    const Circuit circuit = parse_circuit(bytes, opts.max_qubits);
    const SubsystemLayout &layout = circuit.layout();
    InitialState initial = load_initial(initial_spec, layout);
    const DenseVector final_state = run(circuit, initial.state);
    const JointDistribution dist = measure_all(final_state, layout);

    std::vector<OutcomeTriple> draws;
    if (opts.samples > 0) {
        draws = sample(final_state, layout, opts.samples, opts.seed);
    }

    if (format == Format::Csv) {
        return "m,p,e,probability\n" + csv_rows(dist, "");
    }
    if (format == Format::Text) {
        std::ostringstream s;
        s << "simulate " << path << " from " << initial.description << "\n" << text_distribution(dist);
        if (!draws.empty()) {
            s << "samples (seed " << opts.seed << "):\n";
            for (const OutcomeTriple &t : draws) {
                s << t.m << " " << t.p << " " << t.e << "\n";
            }
        }
        return s.str();
    }

    Json j;
    std::optional<std::uint64_t> seed;
    if (opts.samples > 0) {
        seed = opts.seed;
    }
    j["manifest"] = manifest_json(Manifest{"simulate", content_digest(bytes), seed, current_timestamp()});
    j["initial"] = initial.description;
    j["distribution"] = distribution_json(dist);
    if (!draws.empty()) {
        Json arr = Json::array();
        for (const OutcomeTriple &t : draws) {
            arr.push_back(Json::array({t.m, t.p, t.e}));
        }
        j["samples"] = std::move(arr);
    }
    // The same dependence figures as an audit, but for the supplied state.
    try {
        j["audit"] = audit_json(audit(circuit, AdversaryConfig::for_circuit(circuit), initial.state));
    } catch (const InvariantError &) {
        j["audit"] = nullptr;
    }
    Json checks;
    checks["norm_residual"] = std::abs(final_state.norm() - 1.0);
    checks["distribution_sum_residual"] = std::abs(dist.total() - 1.0);
    checks["input_renormalized"] = initial.renormalized;
    j["checks"] = std::move(checks);
    return dump_json(j);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Audit random-number-generation circuits against entangled environments", "qindep"};
    app.require_subcommand(1);

    CommonOptions opts;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", opts.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", opts.out_path, "Write the report to this path");
    };
    auto add_circuit_options = [&](CLI::App *sub) {
        sub->add_option("--max-qubits", opts.max_qubits, "Total qubit budget")->check(CLI::Range(1, 62));
        sub->add_option("--samples", opts.samples, "Number of sampled shots");
        sub->add_option("--seed", opts.seed, "Sampling seed");
    };

    CLI::App *case_study = app.add_subcommand("case-study", "Run the built-in two-qubit setup three ways");
    add_common(case_study);

    std::vector<std::string> audit_paths;
    std::optional<std::uint64_t> p_star;
    bool batch = false;
    CLI::App *audit_cmd = app.add_subcommand("audit", "Build the entangled adversary for a circuit and audit it");
    audit_cmd->add_option("circuit", audit_paths, "Circuit file(s)")->required();
    audit_cmd->add_option("--p-star", p_star, "Successful P outcome to steer to (default: smallest)");
    audit_cmd->add_flag("--batch", batch, "Audit several circuit files, reports in input order");
    add_common(audit_cmd);
    add_circuit_options(audit_cmd);

    std::string sim_path;
    std::string initial_spec = "basis:0";
    CLI::App *simulate = app.add_subcommand("simulate", "Run a circuit on a given initial state");
    simulate->add_option("circuit", sim_path, "Circuit file")->required();
    simulate->add_option("--initial", initial_spec, "basis:<int> or an amplitude file");
    add_common(simulate);
    add_circuit_options(simulate);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "qindep: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        std::string body;
        if (*case_study) {
            body = cmd_case_study(opts);
        } else if (*audit_cmd) {
            body = cmd_audit(audit_paths, opts, p_star, batch);
        } else {
            body = cmd_simulate(sim_path, initial_spec, opts);
        }
        emit(opts, body, out);
        return kExitOk;
    } catch (const InputError &e) {
        err << "qindep: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceError &e) {
        err << "qindep: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const std::exception &e) {
        err << "qindep: internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace qindep::cli
