// Copyright 2026 The lqwalk Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <cli.hpp>

using namespace lqw;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "lqwalk");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) {
        out.push_back(l);
    }
    return out;
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("lqwalk_test_" + name);
}

} // namespace

TEST(CliRun, PrintsStepAndProbability) {
    const auto r = invoke({"run", "--side", "100", "--marked", "0,0", "23,27", "--weight", "wong"});
    EXPECT_EQ(r.code, 0);
    ASSERT_EQ(r.out.rfind("T=153 Pr=", 0), 0u) << r.out;
    EXPECT_NEAR(std::stod(r.out.substr(9)), 0.586377681077719, 1e-9);
}

TEST(CliRun, MatchesLibraryCallExactly) {
    const auto path = temp_file("run.csv");
    const auto r = invoke({"run", "--side", "30", "--marked", "random:3", "--seed", "11", "--anchored", "--weight",
                           "saha", "--output", path.string()});
    ASSERT_EQ(r.code, 0);
    const GridSpec g(30);
    const auto marked = random_marked(g, 3, 11, true);
    const auto rec = run_search(
        RunConfig(g, marked, SelfLoopWeight(weight_value(WeightFormula::saha(), g.n_vertices(), 3))));
    std::ifstream f(path);
    const auto rows = io::read_run_csv(f);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0], io::to_csv_row(rec));
    std::filesystem::remove(path);
}

TEST(CliRun, ExceptionalPairReportsCapStop) {
    const auto r = invoke({"run", "--side", "16", "--marked", "0,0", "1,0", "--weight", "wong", "--max-steps", "2000",
                           "--stop-rule", "sign-change"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("no overlap zero-crossing"), std::string::npos);
}

TEST(CliRun, ConfigurationErrors) {
    EXPECT_EQ(invoke({"run", "--side", "2", "--marked", "5,5"}).code, 2);
    EXPECT_EQ(invoke({"run", "--side", "10", "--marked", "0,0", "--weight", "bogus"}).code, 2);
    EXPECT_EQ(invoke({"run", "--side", "10", "--marked", "0,0", "0,0"}).code, 2);
    EXPECT_EQ(invoke({"run", "--side", "10", "--marked", "Mm:2"}).code, 2);
    EXPECT_EQ(invoke({"run", "--side", "10", "--marked", "zz"}).code, 2);
    EXPECT_EQ(invoke({"run", "--side", "10"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"run", "--side", "10", "--marked", "0,0", "--stop-rule", "never"}).code, 2);
}

TEST(CliSweep, DefaultStepGivesFullGrid) {
    const auto r = invoke({"sweep", "--side", "20", "--marked", "Mm:2", "--a-min", "0.5", "--a-max", "4", "--a-step",
                           "0.05"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 72u);
    EXPECT_EQ(ls[0], "a,l,T,Pr,capped");
}

TEST(CliSweep, DegenerateRangeEqualsRun) {
    const auto s = invoke({"sweep", "--side", "40", "--marked", "0,0", "7,9", "--a-min", "1.5", "--a-max", "1.5"});
    ASSERT_EQ(s.code, 0);
    std::istringstream is(s.out);
    const auto rows = io::read_sweep_csv(is);
    ASSERT_EQ(rows.size(), 1u);
    const auto r = invoke({"run", "--side", "40", "--marked", "0,0", "7,9", "--weight", "a:1.5"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "T=" + std::to_string(rows[0].T) + " Pr=" + io::format_15g(rows[0].Pr) + "\n");
}

TEST(CliOptimize, PrintsBestMultiplier) {
    const auto r = invoke({"optimize", "--side", "30", "--marked", "0,0", "--resolution", "0.05"});
    ASSERT_EQ(r.code, 0);
    const GridSpec g(30);
    const auto res = optimize_a(g, make_Mm(30, 1), 0.05);
    EXPECT_EQ(r.out, "a_opt=" + io::format_15g(res.a_opt) + " T=" + std::to_string(res.T) +
                         " Pr=" + io::format_15g(res.Pr) + "\n");
}

TEST(CliStationary, AdjacentPair) {
    const auto r = invoke({"stationary", "--side", "16", "--marked", "0,0", "1,0", "--weight", "wong"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 3u);
    const std::string prefix = "matching found; residual ";
    ASSERT_EQ(ls[0].rfind(prefix, 0), 0u);
    EXPECT_LE(std::stod(ls[0].substr(prefix.size())), 1e-12);
    EXPECT_EQ(ls.back().rfind("pm bound ", 0), 0u);
}

TEST(CliStationary, DiagonalPairHasNoMatching) {
    const auto r = invoke({"stationary", "--side", "16", "--marked", "0,0", "1,1"});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(r.out, "no perfect matching\n");
}

TEST(CliStationary, FourVertexExample) {
    const auto path = temp_file("stationary.json");
    const auto r = invoke({"stationary", "--side", "16", "--marked", "0,0", "1,0", "1,1", "1,2", "--output",
                           path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("pm bound"), std::string::npos);
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j.at("pairs").size(), 2u);
    EXPECT_LE(j.at("residual").get<double>(), 1e-12);
    std::filesystem::remove(path);
}

TEST(CliReproduce, Table1) {
    const auto path = temp_file("table1.csv");
    const auto r = invoke({"reproduce", "table1", "--output", path.string()});
    EXPECT_EQ(r.code, 0) << r.out;
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, "marked,T,Pr");
    int rows = 0;
    for (std::string l; std::getline(f, l);) {
        ++rows;
    }
    EXPECT_EQ(rows, 5);
    EXPECT_EQ(invoke({"reproduce", "table9"}).code, 2);
    std::filesystem::remove(path);
}
