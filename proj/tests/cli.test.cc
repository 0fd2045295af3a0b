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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "report.h"

using nlohmann::json;

namespace {

const std::string kData = QINDEP_DATA_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qindep::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &content) {
    auto path = std::filesystem::temp_directory_path() / ("qindep_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string strip_timestamp(const std::string &s) {
    return std::regex_replace(s, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
}

}  // namespace

TEST(Cli, case_study_report) {
    Result r = run_cli({"case-study"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["manifest"]["command"], "case-study");
    EXPECT_EQ(j["manifest"]["index_convention"], "mpe-msb-v1");
    EXPECT_LE(j["checks"]["fixed_point_residual"].get<double>(), 1e-12);
    EXPECT_NEAR(j["checks"]["bell_fidelity_p0"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["checks"]["bell_fidelity_p1"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["checks"]["conditional_probability_p0"].get<double>(), 0.5, 1e-12);

    ASSERT_EQ(j["rows"].size(), 3u);
    const json &honest = j["rows"][0];
    EXPECT_EQ(honest["name"], "honest-product");
    EXPECT_LE(honest["audit"]["mutual_information_bits"].get<double>(), 1e-12);
    EXPECT_NEAR(honest["audit"]["output_min_entropy_given_e_bits"].get<double>(), 1.0, 1e-12);
    for (int i : {1, 2}) {
        const json &row = j["rows"][i];
        EXPECT_NEAR(row["audit"]["mutual_information_bits"].get<double>(), 1.0, 1e-12);
        EXPECT_NEAR(row["audit"]["agreement_probability"].get<double>(), 1.0, 1e-12);
    }
}

TEST(Cli, audit_matches_case_study_constructed_row) {
    Result cs = run_cli({"case-study"});
    Result au = run_cli({"audit", kData + "/case_study.qc"});
    ASSERT_EQ(au.code, 0) << au.err;
    json a = json::parse(au.out)["audit"];
    json row = json::parse(cs.out)["rows"][2]["audit"];
    EXPECT_EQ(a, row);
    json full = json::parse(au.out);
    for (const char *key : {"manifest", "distribution", "audit", "checks"}) {
        EXPECT_TRUE(full.contains(key)) << key;
    }
    EXPECT_TRUE(full["manifest"]["seed"].is_null());
    EXPECT_TRUE(full["manifest"]["input_digest"].get<std::string>().starts_with("sha256:"));
}

TEST(Cli, singleton_success_set_defaults_p_star) {
    std::string path = write_temp("singleton.qc", "layout M=1 P=1 E=1\nH M0\nCNOT M0 P0\nsuccess {1}\noutput m\n");
    Result r = run_cli({"audit", path});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["audit"]["p_star"], 1);
    EXPECT_NEAR(j["audit"]["success_probability"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, exit_codes) {
    Result env = run_cli({"audit", kData + "/touches_env.qc"});
    EXPECT_EQ(env.code, 2);
    EXPECT_NE(env.err.find("line 2: gate touches environment wire"), std::string::npos) << env.err;

    EXPECT_EQ(run_cli({"audit", kData + "/heralded.qc", "--max-qubits", "5"}).code, 3);
    EXPECT_EQ(run_cli({"audit", kData + "/case_study.qc", "--p-star", "2"}).code, 2);
    EXPECT_EQ(run_cli({"audit", "/nonexistent/file.qc"}).code, 2);
    EXPECT_EQ(run_cli({"audit"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"case-study", "--format", "yaml"}).code, 2);
    EXPECT_EQ(run_cli({"audit", kData + "/case_study.qc", kData + "/heralded.qc"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);

    std::string never = write_temp("never.qc", "layout M=1 P=1 E=1\nsuccess {1}\noutput m\n");
    EXPECT_EQ(run_cli({"simulate", never}).code, 0);
}

TEST(Cli, reports_are_byte_stable_modulo_timestamp) {
    std::vector<std::string> args{"audit", kData + "/heralded.qc", "--samples", "500", "--seed", "9"};
    Result a = run_cli(args);
    Result b = run_cli(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(strip_timestamp(a.out), strip_timestamp(b.out));
    EXPECT_EQ(strip_timestamp(run_cli({"case-study"}).out), strip_timestamp(run_cli({"case-study"}).out));
}

TEST(Cli, source_date_epoch_pins_timestamp) {
    setenv("SOURCE_DATE_EPOCH", "0", 1);
    Result a = run_cli({"case-study"});
    unsetenv("SOURCE_DATE_EPOCH");
    EXPECT_EQ(json::parse(a.out)["manifest"]["timestamp"], "1970-01-01T00:00:00Z");
}

TEST(Cli, audit_sampling_section) {
    Result r = run_cli({"audit", kData + "/heralded.qc", "--samples", "2000", "--seed", "42"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["manifest"]["seed"], 42);
    EXPECT_EQ(j["audit"]["sampling"]["samples"], 2000);
    EXPECT_EQ(j["audit"]["sampling"]["empirical_agreement"].get<double>(), 1.0);
    EXPECT_NEAR(j["audit"]["mutual_information_bits"].get<double>(), 2.0, 1e-9);
}

TEST(Cli, simulate_case_study_from_zero) {
    Result r = run_cli({"simulate", kData + "/case_study.qc", "--initial", "basis:0"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["distribution"].size(), 4u);
    for (const json &row : j["distribution"]) {
        EXPECT_EQ(row["e"], 0);
        EXPECT_NEAR(row["probability"].get<double>(), 0.25, 1e-12);
    }
    EXPECT_FALSE(j.contains("samples"));
}

TEST(Cli, simulate_empty_circuit_point_distribution) {
    std::string path = write_temp("empty.qc", "layout M=1 P=1 E=1\nsuccess {0}\noutput m\n");
    Result r = run_cli({"simulate", path, "--initial", "basis:5"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j["distribution"].size(), 1u);
    EXPECT_EQ(j["distribution"][0]["m"], 1);
    EXPECT_EQ(j["distribution"][0]["p"], 0);
    EXPECT_EQ(j["distribution"][0]["e"], 1);
    EXPECT_EQ(j["distribution"][0]["probability"], 1.0);
}

TEST(Cli, simulate_samples_text) {
    std::string path = write_temp("empty2.qc", "layout M=1 P=1 E=1\nsuccess {0}\noutput m\n");
    Result r = run_cli({"simulate", path, "--samples", "10", "--seed", "7", "--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out.substr(r.out.find("samples")));
    std::string line;
    std::getline(lines, line);
    int count = 0;
    while (std::getline(lines, line)) {
        EXPECT_EQ(line, "0 0 0");
        ++count;
    }
    EXPECT_EQ(count, 10);
}

TEST(Cli, simulate_amplitude_file) {
    std::string amps = write_temp("alpha.amp", "# entangled preset\n1 0 1 0\n0 1 0 1,0\n");
    Result r = run_cli({"simulate", kData + "/case_study.qc", "--initial", amps});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["checks"]["input_renormalized"], true);
    EXPECT_NEAR(j["audit"]["mutual_information_bits"].get<double>(), 1.0, 1e-12);
    for (const json &row : j["distribution"]) {
        EXPECT_EQ(row["m"], row["e"]);
    }
    EXPECT_EQ(run_cli({"simulate", kData + "/case_study.qc", "--initial", write_temp("bad.amp", "1 x")}).code, 2);
    EXPECT_EQ(run_cli({"simulate", kData + "/case_study.qc", "--initial", write_temp("short.amp", "1 0")}).code, 2);
    EXPECT_EQ(run_cli({"simulate", kData + "/case_study.qc", "--initial", "basis:99"}).code, 2);
}

TEST(Cli, csv_flattens_distribution) {
    Result r = run_cli({"simulate", kData + "/case_study.qc", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "m,p,e,probability\n0,0,0,0.24999999999999989\n0,1,0,0.24999999999999989\n"
                     "1,0,0,0.24999999999999989\n1,1,0,0.24999999999999989\n");
    Result cs = run_cli({"case-study", "--format", "csv"});
    EXPECT_TRUE(cs.out.starts_with("row,m,p,e,probability\nhonest-product,0,0,0,"));
}

TEST(Cli, out_path) {
    auto path = (std::filesystem::temp_directory_path() / "qindep_cli_test_out.json").string();
    std::filesystem::remove(path);
    Result r = run_cli({"case-study", "--out", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    EXPECT_EQ(j["manifest"]["command"], "case-study");
}

TEST(Cli, batch_preserves_input_order) {
    std::vector<std::string> files{kData + "/heralded.qc", kData + "/case_study.qc", kData + "/heralded.qc"};
    std::vector<std::string> args{"audit", "--batch"};
    args.insert(args.end(), files.begin(), files.end());
    Result r = run_cli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_NEAR(j[0]["audit"]["mutual_information_bits"].get<double>(), 2.0, 1e-9);
    EXPECT_NEAR(j[1]["audit"]["mutual_information_bits"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(j[0]["audit"], j[2]["audit"]);
    EXPECT_EQ(strip_timestamp(r.out), strip_timestamp(run_cli(args).out));
}

TEST(DumpJson, seventeen_digit_doubles) {
    qindep::cli::Json j;
    j["third"] = 1.0 / 3.0;
    j["n"] = 3;
    j["s"] = "a\"b";
    EXPECT_EQ(qindep::cli::dump_json(j), "{\n  \"third\": 0.33333333333333331,\n  \"n\": 3,\n  \"s\": \"a\\\"b\"\n}\n");
    EXPECT_EQ(json::parse(qindep::cli::dump_json(j))["third"].get<double>(), 1.0 / 3.0);
}
