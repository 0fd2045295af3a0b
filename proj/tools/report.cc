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

#include "report.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>

#include "qindep/circuit_format.h"
#include "qindep/layout.h"
#include "qindep/prng.h"
#include "qindep/version.h"

namespace qindep::cli {

namespace {

void write_string(std::string &out, const std::string &s) {
    // nlohmann handles escaping; reuse it for strings only.
    out += Json(s).dump();
}

void write(std::string &out, const Json &v, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad;
                write_string(out, it.key());
                out += ": ";
                write(out, it.value(), depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const Json &item : v) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += pad;
                write(out, item, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            double d = v.get<double>();
            out += std::isfinite(d) ? format_double(d) : "null";
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const Json &value) {
    std::string out;
    write(out, value, 0);
    out += "\n";
    return out;
}

std::string current_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    if (const char *epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char *end = nullptr;
        long long v = std::strtoll(epoch, &end, 10);
        if (end != epoch && *end == '\0') {
            t = static_cast<std::time_t>(v);
        }
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json manifest_json(const Manifest &manifest) {
    Json j;
    j["command"] = manifest.command;
    j["input_digest"] = manifest.input_digest;
    j["tool_version"] = std::string(kVersion);
    j["index_convention"] = std::string(kIndexConvention);
    j["prng"] = std::string(Prng::kName);
    j["seed"] = manifest.seed ? Json(*manifest.seed) : Json(nullptr);
    j["timestamp"] = manifest.timestamp;
    return j;
}

Json audit_json(const AuditReport &r) {
    Json j;
    j["success_probability"] = r.success_probability;
    j["agreement_probability"] = r.agreement_probability;
    j["mutual_information_bits"] = r.mutual_information_bits;
    j["output_min_entropy_given_e_bits"] = r.output_min_entropy_given_e_bits;
    j["p_star"] = r.p_star;
    j["initial"] = r.used_override ? "override" : "adversarial";
    j["circuit_digest"] = r.circuit_digest;
    j["index_convention"] = r.index_convention;
    j["version"] = r.version;
    if (r.sampling) {
        Json s;
        s["prng"] = r.sampling->prng;
        s["seed"] = r.sampling->seed;
        s["samples"] = r.sampling->samples;
        s["successes"] = r.sampling->successes;
        s["empirical_agreement"] = r.sampling->empirical_agreement;
        j["sampling"] = std::move(s);
    } else {
        j["sampling"] = nullptr;
    }
    return j;
}

Json distribution_json(const JointDistribution &dist) {
    Json arr = Json::array();
    for (const auto &[t, p] : dist.support()) {
        Json row;
        row["m"] = t.m;
        row["p"] = t.p;
        row["e"] = t.e;
        row["probability"] = p;
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace qindep::cli
