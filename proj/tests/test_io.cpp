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

#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <lqwalk/io.hpp>
#include <lqwalk/lqwalk.hpp>

using namespace lqw;

TEST(FormatReal, RoundTripsArbitraryDoubles) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        EXPECT_EQ(io::parse_real(io::format_real(v)), v);
    }
    EXPECT_EQ(io::parse_real(io::format_real(std::numeric_limits<double>::denorm_min())),
              std::numeric_limits<double>::denorm_min());
    EXPECT_EQ(io::format_15g(0.586377681077719), "0.586377681077719");
}

TEST(ParseFields, RejectsGarbage) {
    EXPECT_THROW(io::parse_real("0.5x"), ConfigError);
    EXPECT_THROW(io::parse_real(""), ConfigError);
    EXPECT_THROW(io::parse_int("3.0"), ConfigError);
    EXPECT_EQ(io::split_csv_line("a,,b").size(), 3u);
}

TEST(RunCsv, RoundTripsRecords) {
    std::vector<RunRecord> recs;
    const GridSpec g(12);
    recs.push_back(run_search(RunConfig(g, MarkedSet(g, {{0, 0}}), SelfLoopWeight(4.0 / 144))));
    recs.push_back(run_search(RunConfig(g, MarkedSet(g, {{0, 0}, {5, 7}}), SelfLoopWeight(0.0))));
    recs.push_back(
        run_search(RunConfig(g, MarkedSet(g, {{0, 0}, {1, 0}}), SelfLoopWeight(4.0 / 144), 50, false, StopRule::sign_change)));
    ASSERT_TRUE(recs.back().stopped_by_cap);

    std::stringstream ss;
    io::write_run_csv(ss, recs);
    std::string header;
    {
        std::istringstream copy(ss.str());
        std::getline(copy, header);
    }
    EXPECT_EQ(header, "side,N,m,l,T,Pr,capped,max_prob,argmax_step");
    const auto back = io::read_run_csv(ss);
    ASSERT_EQ(back.size(), recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        EXPECT_EQ(back[i], io::to_csv_row(recs[i]));
    }
    EXPECT_TRUE(back[2].capped);
    EXPECT_EQ(back[2].T, 50);
}

TEST(RunCsv, RejectsWrongHeaderAndWidth) {
    std::istringstream bad_header("side,N\n");
    EXPECT_THROW(io::read_run_csv(bad_header), ConfigError);
    std::istringstream bad_row("side,N,m,l,T,Pr,capped,max_prob,argmax_step\n1,2,3\n");
    EXPECT_THROW(io::read_run_csv(bad_row), ConfigError);
}

TEST(SweepCsv, RoundTripsRows) {
    const GridSpec g(16);
    const auto res = sweep_a(g, make_Mm(16, 1), 0.5, 2.0, 0.1);
    std::stringstream ss;
    io::write_sweep_csv(ss, res.rows);
    EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "a,l,T,Pr,capped");
    const auto back = io::read_sweep_csv(ss);
    ASSERT_EQ(back.size(), res.rows.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].a, res.rows[i].a);
        EXPECT_EQ(back[i].l, res.rows[i].l);
        EXPECT_EQ(back[i].T, res.rows[i].T);
        EXPECT_EQ(back[i].Pr, res.rows[i].Pr);
        EXPECT_EQ(back[i].stopped_by_cap, res.rows[i].stopped_by_cap);
    }
}

TEST(Json, RunRecordFields) {
    const GridSpec g(10);
    const auto rec = run_search(RunConfig(g, MarkedSet(g, {{0, 0}, {3, 4}}), SelfLoopWeight(0.04), 0, true));
    const auto j = io::to_json(rec);
    EXPECT_EQ(j.at("side"), 10);
    EXPECT_EQ(j.at("N"), 100);
    EXPECT_EQ(j.at("m"), 2);
    EXPECT_EQ(j.at("T"), rec.T);
    EXPECT_EQ(j.at("Pr").get<double>(), rec.pr_at_T);
    EXPECT_EQ(j.at("marked")[1][0], 3);
    EXPECT_EQ(j.at("marked")[1][1], 4);
    EXPECT_EQ(j.at("overlap_trace").size(), static_cast<std::size_t>(rec.T) + 1);
    EXPECT_EQ(j.at("overlap_trace")[0].get<double>(), 1.0);
    // nlohmann/json serializes doubles in round-trip form.
    const auto reparsed = nlohmann::json::parse(j.dump());
    EXPECT_EQ(reparsed.at("Pr").get<double>(), rec.pr_at_T);
}

TEST(Json, StationaryReport) {
    const GridSpec g(8);
    const MarkedSet marked(g, {{0, 0}, {1, 0}});
    const auto matching = find_domino_matching(marked);
    ASSERT_TRUE(matching);
    const auto st = build_stationary(g, *matching, SelfLoopWeight(4.0 / 64), 0.1);
    const auto j = io::stationary_report(st, 0.0);
    EXPECT_EQ(j.at("pairs").size(), 1u);
    EXPECT_DOUBLE_EQ(j.at("a").get<double>(), 0.1);
    EXPECT_DOUBLE_EQ(j.at("l").get<double>(), 4.0 / 64);
}
