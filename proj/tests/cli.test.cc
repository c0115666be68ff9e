// Copyright 2026 The chainbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainbell/cli.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chainbell/robust.h"

namespace chainbell::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("chainbell_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

TEST(Cli, CertifySevenEmitsPassingJson) {
    Result r = call({"certify", "--n", "7", "--tol", "1e-9"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_LE(j["sos"]["gamma_expectation"].get<double>(), 1e-9);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["version"], CHAINBELL_VERSION);
    EXPECT_EQ(j["config"]["command"], "certify");
    EXPECT_EQ(j["config"]["n"], 7);
    EXPECT_TRUE(j.contains("generated_at"));
    EXPECT_NEAR(j["reconstruction"]["fidelity_with_phi_plus"].get<double>(), 1, 1e-9);
    EXPECT_FALSE(j["swap_convention"].get<std::string>().empty());
}

TEST(Cli, CertifyFailureExitCode) {
    Result r = call({"certify", "--n", "5", "--tol", "1e-300", "--format", "text"});
    EXPECT_EQ(r.code, kCertificationFailed);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CertifyFourDimensionalSkipsReconstruction) {
    Result r = call({"certify", "--n", "4", "--dim", "4"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(json::parse(r.out)["reconstruction"].is_null());
}

TEST(Cli, RandomnessTextReport) {
    Result r = call({"randomness", "--n", "3"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("R_max = 2.000"), std::string::npos) << r.out;
    Result j = call({"randomness", "--n", "5", "--eps", "0.05", "--format", "json", "--no-timestamp"});
    ASSERT_EQ(j.code, kOk);
    json rep = json::parse(j.out);
    EXPECT_NEAR(rep["r_min"].get<double>(), rep["r_min_closed"].get<double>(), 1e-10);
    EXPECT_NEAR(rep["r_max"].get<double>(), rep["r_max_closed"].get<double>(), 1e-10);
    EXPECT_EQ(rep["per_pair_bits"].size(), 5u);
}

TEST(Cli, CurvesCrossHalfAtStateThreshold) {
    fs::path dir = scratch_dir("curves");
    fs::path out = dir / "fs.csv";
    Result r = call({"curves", "--n-list", "3,5,7,11", "--which", "state", "--out", out.string()});
    ASSERT_EQ(r.code, kOk) << r.err;
    auto rows = parse_csv(slurp(out));
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "r", "xi", "epsilon", "f", "F_lower"}));
    double crossing = -1;
    double prev_r = 0, prev_F = 0;
    int prev_n = 0;
    for (size_t k = 1; k < rows.size(); k++) {
        int n = std::stoi(rows[k][0]);
        double rr = std::stod(rows[k][1]);
        double F = std::stod(rows[k][5]);
        if (n == 11 && prev_n == 11 && prev_F < 0.5 && F >= 0.5) {
            crossing = prev_r + (rr - prev_r) * (0.5 - prev_F) / (F - prev_F);
        }
        if (n == prev_n) {
            EXPECT_GT(rr, prev_r);
        } else {
            EXPECT_GT(n, prev_n);
        }
        prev_n = n;
        prev_r = rr;
        prev_F = F;
    }
    EXPECT_NEAR(crossing, 0.8774, 2e-3);
    fs::remove_all(dir);
}

TEST(Cli, CurvesRoundTripFormatting) {
    std::string csv = curves_csv({11}, {0.9}, BoundKind::observable);
    auto rows = parse_csv(csv);
    ASSERT_EQ(rows.size(), 2u);
    RobustnessPoint p = robustness_at_r(11, 0.9);
    EXPECT_EQ(std::stod(rows[1][4]), p.f_o);
    EXPECT_EQ(std::stod(rows[1][5]), p.F_o_lower);
    EXPECT_EQ(std::stod(rows[1][2]), p.xi);
}

TEST(Cli, DeterministicWithoutTimestamp) {
    for (std::vector<std::string> args : {std::vector<std::string>{"optimize", "--n", "4", "--restarts", "3"},
                                          std::vector<std::string>{"robustness", "--n", "5"},
                                          std::vector<std::string>{"swap", "--n", "5"}}) {
        args.push_back("--no-timestamp");
        Result a = call(args), b = call(args);
        EXPECT_EQ(a.code, kOk) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_FALSE(json::parse(a.out).contains("generated_at"));
    }
}

TEST(Cli, OptimizeReportsGap) {
    Result r = call({"optimize", "--n", "3", "--restarts", "4", "--seed", "7", "--format", "text"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("gap"), std::string::npos);
    Result j = call({"optimize", "--n", "3", "--restarts", "4", "--seed", "7"});
    json rep = json::parse(j.out);
    EXPECT_NEAR(rep["gap"].get<double>(), 0, 1e-8);
    EXPECT_EQ(rep["restarts"], 4);
}

TEST(Cli, SwapReportsFidelities) {
    Result r = call({"swap", "--n", "7"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json rep = json::parse(r.out);
    EXPECT_EQ(rep["insertions"].size(), 15u);
    for (const auto &row : rep["insertions"]) {
        EXPECT_NEAR(row["ancilla_fidelity"].get<double>(), 1, 1e-9);
    }
}

TEST(Cli, RobustnessThresholds) {
    Result r = call({"robustness", "--n", "11", "--eps-grid", "0.01,0.05,0.1"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json rep = json::parse(r.out);
    EXPECT_NEAR(rep["thresholds"]["state_r"].get<double>(), 0.8774, 2e-3);
    EXPECT_NEAR(rep["thresholds"]["observable_r"].get<double>(), 0.97, 2e-3);
    EXPECT_NEAR(rep["thresholds"]["state_epsilon"].get<double>(), 0.1414, 2e-3);
    EXPECT_NEAR(rep["thresholds"]["observable_epsilon"].get<double>(), 0.0701, 2e-3);
    EXPECT_EQ(rep["points"].size(), 3u);
    Result csv = call({"robustness", "--n", "3", "--r-grid", "0.9:1:0.05", "--format", "csv"});
    ASSERT_EQ(csv.code, kOk);
    EXPECT_EQ(parse_csv(csv.out).size(), 4u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, kUsage);
    EXPECT_EQ(call({"certify", "--bogus"}).code, kUsage);
    EXPECT_EQ(call({"certify", "--n", "1"}).code, kUsage);
    EXPECT_EQ(call({"certify", "--dim", "3"}).code, kUsage);
    EXPECT_EQ(call({"certify", "--format", "csv"}).code, kUsage);
    EXPECT_EQ(call({"curves", "--r-grid", "0.9,0.8"}).code, kUsage);
    EXPECT_EQ(call({"curves", "--r-grid", "0.9:1.1:0.1"}).code, kUsage);
    EXPECT_EQ(call({"robustness", "--eps-grid", ""}).code, kUsage);
    EXPECT_EQ(call({"certify", "optimize"}).code, kUsage);
    EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, OutputDirectoryFromEnvironment) {
    fs::path dir = scratch_dir("env");
    ::setenv("CHAINBELL_OUTPUT_DIR", dir.c_str(), 1);
    Result r = call({"randomness", "--n", "3"});
    Result rel = call({"curves", "--n-list", "3", "--out", "sub/c.csv"});
    ::unsetenv("CHAINBELL_OUTPUT_DIR");
    ASSERT_EQ(r.code, kOk) << r.err;
    ASSERT_EQ(rel.code, kOk) << rel.err;
    EXPECT_NE(slurp(dir / "randomness.txt").find("R_max = 2.000"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "sub" / "c.csv"));
    for (const auto &e : fs::recursive_directory_iterator(dir)) {
        EXPECT_EQ(e.path().string().find(".tmp."), std::string::npos) << e.path();
    }
    fs::remove_all(dir);
}

TEST(Cli, UnwritableDestinationLeavesNoFile) {
    fs::path dir = scratch_dir("ro");
    fs::path blocker = dir / "file";
    std::ofstream(blocker) << "x";
    // A regular file where a directory is expected makes the write fail.
    fs::path out = blocker / "x.csv";
    Result r = call({"curves", "--n-list", "3", "--out", out.string()});
    EXPECT_EQ(r.code, kNumericFailure);
    EXPECT_FALSE(fs::exists(out));
    fs::remove_all(dir);
}

TEST(Cli, GridParsing) {
    auto g = parse_grid("0.85:1:0.05", 0.01);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_DOUBLE_EQ(g.front(), 0.85);
    EXPECT_DOUBLE_EQ(g.back(), 1.0);
    EXPECT_EQ(parse_grid("0:1", 0.25).size(), 5u);
    EXPECT_EQ(parse_grid("0.01,0.02,0.05", 0).size(), 3u);
    EXPECT_THROW(parse_grid("1:0", 0.1), std::invalid_argument);
    EXPECT_THROW(parse_grid("0:1:0", 0.1), std::invalid_argument);
    EXPECT_THROW(parse_grid("a,b", 0.1), std::invalid_argument);
    EXPECT_EQ(parse_int_list("3,5,7"), (std::vector<int>{3, 5, 7}));
    EXPECT_THROW(parse_int_list("3,x"), std::invalid_argument);
}

TEST(Cli, BuiltToolRuns) {
    std::string cmd = std::string(CHAINBELL_TOOL_PATH) + " randomness --n 3 2>&1";
    FILE *p = popen(cmd.c_str(), "r");
    ASSERT_NE(p, nullptr);
    std::string out;
    char buf[256];
    while (fgets(buf, sizeof buf, p)) {
        out += buf;
    }
    int status = pclose(p);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_NE(out.find("R_max = 2.000"), std::string::npos);
    std::string bad = std::string(CHAINBELL_TOOL_PATH) + " certify --n 1 >/dev/null 2>&1";
    EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), kUsage);
}

}  // namespace
}  // namespace chainbell::cli
