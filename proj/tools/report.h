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

#ifndef QINDEP_TOOLS_REPORT_H
#define QINDEP_TOOLS_REPORT_H

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qindep/adversary.h"
#include "qindep/simulator.h"

namespace qindep::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints with two-space indent; doubles use 17 significant digits so
/// every value reads back bit-exactly. Non-finite doubles become null.
std::string dump_json(const Json &value);

struct Manifest {
    std::string command;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    std::string timestamp;
};

/// UTC ISO-8601 time. Honours SOURCE_DATE_EPOCH when it is set.
std::string current_timestamp();

Json manifest_json(const Manifest &manifest);
Json audit_json(const AuditReport &report);
Json distribution_json(const JointDistribution &dist);

}  // namespace qindep::cli

#endif
