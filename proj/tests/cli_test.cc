// Copyright 2026 The gqcc Authors
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

#include "gqcc/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

using namespace gqcc;
using namespace gqcc::testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kExample = GQCC_EXAMPLE_CODEFILE;

std::string write_temp(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, validate_example) {
    auto r = run({"validate", kExample});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("encoded: ok"), std::string::npos);
}

TEST(Cli, syndrome_table_matches_expected) {
    auto r = run({"syndrome-table", kExample});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::string expected = "error,syndrome\n";
    for (const auto &[label, bits] : expected_syndrome_table()) {
        expected += label + "," + bits + "\n";
    }
    EXPECT_EQ(r.out, expected);
}

TEST(Cli, encode_prints_both_matrices_deterministically) {
    auto a = run({"encode", kExample});
    auto b = run({"encode", kExample});
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("initial S0(D)"), std::string::npos);
    EXPECT_NE(a.out.find("encoded S_C(D)"), std::string::npos);
    EXPECT_NE(a.out.find(expected_encoded_s_i().str().substr(0, 20)), std::string::npos);
}

TEST(Cli, check_example_is_correctable) {
    auto r = run({"check", kExample});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("pairs: 120"), std::string::npos);
    EXPECT_NE(r.out.find("correctable: yes"), std::string::npos);
    EXPECT_NE(r.out.find("I X1 DETECTED"), std::string::npos);
}

TEST(Cli, passive_yes_and_no) {
    EXPECT_EQ(run({"passive", kExample, "--error", "IZIZI|IIZII"}).code, kExitOk);
    auto no = run({"passive", kExample, "--error", "XIIII"});
    EXPECT_EQ(no.code, kExitFailure);
    EXPECT_NE(no.out.find("not passively corrected"), std::string::npos);
    EXPECT_EQ(run({"passive", kExample, "--error", "XII"}).code, kExitUsage);
    EXPECT_EQ(run({"passive", kExample, "--error", "Q"}).code, kExitUsage);
}

TEST(Cli, simulate_alternating_json) {
    auto r = run({"simulate", kExample, "--noise", "alternating", "--frames", "100", "--trials", "1000", "--seed", "7",
                  "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["failure_rate"], 0.0);
    EXPECT_EQ(j["trials"], 1000);
}

TEST(Cli, simulate_csv_and_text) {
    auto csv = run({"simulate", kExample, "--noise", "depolarizing:0.01", "--frames", "6", "--trials", "50", "--csv"});
    ASSERT_EQ(csv.code, kExitOk) << csv.err;
    EXPECT_EQ(csv.out.substr(0, 6), "noise,");
    auto text = run({"simulate", kExample, "--noise", "none", "--trials", "5", "--frames", "4"});
    ASSERT_EQ(text.code, kExitOk);
    EXPECT_NE(text.out.find("failures:     0"), std::string::npos);
}

TEST(Cli, usage_errors_exit_2) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate", kExample}).code, kExitUsage);
    EXPECT_EQ(run({"validate"}).code, kExitUsage);
    EXPECT_EQ(run({"validate", kExample, "--bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"validate", "/nonexistent/file.qcc"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", kExample}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", kExample, "--noise", "depolarizing:2"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", kExample, "--noise", "none", "--json", "--csv"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", kExample, "--noise", "none", "--frames", "1"}).code, kExitUsage);
}

TEST(Cli, parse_error_reports_position) {
    auto path = write_temp("gqcc_cli_bad.qcc", "code t\nparams n=5 k=1 l=1 r=1 c=1\ncircuit:\n  CNOT 2 2 D\n");
    auto r = run({"validate", path});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(":4:10: control equals target"), std::string::npos) << r.err;
}

TEST(Cli, failing_validation_exits_1) {
    // Without the circuit, the info qubit is untouched and the structure still holds, but an
    // error set with an undetectable logical operator fails the correctability check.
    auto path = write_temp(
        "gqcc_cli_logical.qcc", "code t\nparams n=5 k=1 l=1 r=1 c=1\ncircuit:\nerrors:\n  IIIII\n  IIIIX\n");
    auto r = run({"check", path});
    EXPECT_EQ(r.code, kExitFailure);
    EXPECT_NE(r.out.find("VIOLATION"), std::string::npos);
    EXPECT_NE(r.out.find("correctable: no"), std::string::npos);
}

TEST(Cli, help_exits_0) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("simulate"), std::string::npos);
}
