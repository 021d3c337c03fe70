// Copyright 2026 The graphdiag Authors
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
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graphdiag/graph_io.h"

namespace graphdiag {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

TEST(Cli, ChainScanCsv) {
    CliResult r = run({"chain-scan", "--n-min", "2", "--n-max", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# command=chain-scan"), std::string::npos);
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "s_crit", "T_over_delta"}));
    EXPECT_EQ(rows[1][0], "2");
    EXPECT_NEAR(std::stod(rows[1][1]), std::sqrt(2.0) - 1, 1e-11);
    double prev = 1;
    for (size_t i = 1; i < rows.size(); i++) {
        double s = std::stod(rows[i][1]);
        EXPECT_LT(s, prev);
        prev = s;
    }
}

TEST(Cli, PptThresholdJson) {
    CliResult r = run({"ppt-threshold", "chain:12"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["config"]["graph"], "chain:12");
    double s = doc["s_crit"];
    EXPECT_GT(s, 3 - 2 * std::sqrt(2.0));
    EXPECT_LT(s, std::sqrt(2.0) - 1);
    EXPECT_NEAR(std::tanh(double(doc["beta_delta"]) / 2), s, 1e-12);
}

TEST(Cli, PptThresholdOtherModels) {
    CliResult g = run({"ppt-threshold", "chain:3", "--model", "global"});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_NEAR(double(nlohmann::json::parse(g.out)["alpha_crit"]), 2, 1e-8);
    CliResult l = run({"ppt-threshold", "chain:4", "--model", "local"});
    ASSERT_EQ(l.code, 0) << l.err;
    EXPECT_NEAR(double(nlohmann::json::parse(l.out)["p_crit"]), 0.4684355, 1e-6);
}

TEST(Cli, LatticeScanMonotone) {
    CliResult r = run({"lattice-scan", "--m-min", "2", "--m-max", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_GT(std::stod(rows[1][2]), std::stod(rows[2][2]));
}

TEST(Cli, WitnessExitCodes) {
    CliResult hot = run({"witness", "--graph", "chain:4", "--s", "0.1"});
    EXPECT_EQ(hot.code, 0) << hot.err;
    EXPECT_FALSE(bool(nlohmann::json::parse(hot.out)["entangled"]));
    CliResult cold = run({"witness", "--graph", "chain:4", "--s", "0.5", "--circuit"});
    EXPECT_EQ(cold.code, 2) << cold.err;
    auto doc = nlohmann::json::parse(cold.out);
    EXPECT_NEAR(double(doc["expectation"]), -1.0625 / 16, 1e-15);
}

TEST(Cli, DistillOutputs) {
    CliResult one = run({"distill", "--nA", "2", "--nB", "2", "--alpha", "5"});
    ASSERT_EQ(one.code, 0) << one.err;
    auto doc = nlohmann::json::parse(one.out);
    EXPECT_EQ(doc["attractor"], "pure");
    EXPECT_EQ(double(doc["alpha_threshold"]), 4);
    CliResult scan = run({"distill", "--nA", "2", "--nB", "2", "--alpha-range", "3,5,5"});
    ASSERT_EQ(scan.code, 0) << scan.err;
    auto rows = csv_rows(scan.out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "attractor", "iterations"}));
    EXPECT_EQ(rows[1][1], "mixed");
    EXPECT_EQ(rows[3][1], "half-purified");
    EXPECT_EQ(rows[5][1], "pure");
}

TEST(Cli, DecomposeReportsPositivity) {
    CliResult r = run({"decompose", "--graph", "chain:5", "--s", "0.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NO_THROW(nlohmann::json::parse(r.out));
}

TEST(Cli, OracleCheck) {
    CliResult r = run({"oracle-check", "--suite", "spectra", "--seed", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("check,passed,cases,worst"), std::string::npos);
}

TEST(Cli, Errors) {
    for (std::vector<std::string> args : {
             std::vector<std::string>{"ppt-threshold", "blah:3"},
             std::vector<std::string>{"ppt-threshold", "chain:x"},
             std::vector<std::string>{"ppt-threshold", "/nonexistent/graph.json"},
             std::vector<std::string>{"witness", "--graph", "chain:3", "--x", "10"},
             std::vector<std::string>{"distill", "--nA", "2", "--nB", "2", "--alpha-range", "1,2"},
         }) {
        CliResult r = run(args);
        EXPECT_EQ(r.code, 1) << args[0] << " " << args[1];
        EXPECT_NE(r.err.find("error:"), std::string::npos) << r.err;
    }
    EXPECT_NE(run({"no-such-command"}).code, 0);
}

TEST(Cli, BadJsonGraph) {
    std::string path = ::testing::TempDir() + "graphdiag_bad.json";
    std::ofstream(path) << "{\"n\": 3, \"edges\": [[0, 1], [1";
    CliResult r = run({"ppt-threshold", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, OutputIndependentOfThreads) {
    std::vector<std::string> args = {"perturb-scan", "--n-min", "3", "--n-max", "5", "--samples", "20", "--sigma", "0.1",
                                     "--seed", "9"};
    CliResult one = run([&] {
        auto a = args;
        a.insert(a.begin(), {"--threads", "1"});
        return a;
    }());
    CliResult four = run([&] {
        auto a = args;
        a.insert(a.begin(), {"--threads", "4"});
        return a;
    }());
    ASSERT_EQ(one.code, 0) << one.err;
    // Only the recorded thread count may differ.
    auto strip = [](std::string s) {
        auto at = s.find("# threads=");
        if (at != std::string::npos) {
            s.erase(at, s.find('\n', at) - at);
        }
        return s;
    };
    EXPECT_EQ(strip(one.out), strip(four.out));
}

TEST(Cli, OutputFile) {
    std::string path = ::testing::TempDir() + "graphdiag_chain.csv";
    CliResult r = run({"-o", path, "chain-scan", "--n-min", "2", "--n-max", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(csv_rows(buf.str()).size(), 3u);
}

TEST(GraphIo, JsonRoundTrip) {
    Graph g = parse_graph_spec("lattice:2x3");
    Graph back = graph_from_json(graph_to_json(g));
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_THROW(graph_from_json("{\"n\": 2, \"edges\": [[0, 5]]}"), std::exception);
}

TEST(GraphIo, FormatNumber) {
    EXPECT_EQ(format_number(0.1234567890123456), "0.123456789012");
    EXPECT_EQ(format_number(2), "2");
    EXPECT_EQ(format_number(INFINITY), "inf");
    EXPECT_EQ(format_number(-INFINITY), "-inf");
    EXPECT_EQ(format_number(NAN), "nan");
}

}  // namespace
}  // namespace graphdiag
