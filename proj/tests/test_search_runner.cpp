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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include <lqwalk/placements.hpp>
#include <lqwalk/search_runner.hpp>
#include <lqwalk/stationary.hpp>

using namespace lqw;

TEST(DefaultMaxSteps, FormulaValues) {
    EXPECT_EQ(default_max_steps(GridSpec(100)), 3035);
    EXPECT_EQ(default_max_steps(GridSpec(2)), 24);
    int prev = 0;
    for (int side = 2; side <= 64; ++side) {
        const int cur = default_max_steps(GridSpec(side));
        EXPECT_GT(cur, prev);
        prev = cur;
    }
}

TEST(MakeMm, Placements) {
    const auto one = make_Mm(200, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.coords()[0], (Vertex{0, 0}));
    const auto three = make_Mm(200, 3);
    const std::vector<Vertex> expected{{0, 0}, {0, 10}, {0, 20}};
    EXPECT_TRUE(std::equal(three.coords().begin(), three.coords().end(), expected.begin(), expected.end()));
    EXPECT_THROW(make_Mm(20, 3), ConfigError);
    EXPECT_NO_THROW(make_Mm(21, 3));
    EXPECT_THROW(make_Mm(20, 0), ConfigError);
}

TEST(RunSearch, EmptyMarkedSetIsConfigError) {
    const GridSpec g(4);
    EXPECT_THROW(run_search(RunConfig(g, MarkedSet(g, std::vector<Vertex>{}), SelfLoopWeight(0.25))), ConfigError);
}

TEST(RunSearch, TwoRandomVerticesSide100) {
    const GridSpec g(100);
    const auto rec = run_search(RunConfig(g, MarkedSet(g, {{0, 0}, {23, 27}}), SelfLoopWeight(4.0 / 10000.0)));
    EXPECT_EQ(rec.T, 153);
    EXPECT_NEAR(rec.pr_at_T, 0.586377681077719, 1e-9);
    EXPECT_FALSE(rec.stopped_by_cap);
    EXPECT_EQ(rec.stop_reason, StopReason::sign_change);
    EXPECT_LT(rec.overlap_at_T, 0.0);
}

TEST(RunSearch, SingleVertexTurnsNearZero) {
    // The overlap dips to ~0.006 and turns back up without changing sign.
    const GridSpec g(100);
    const auto rec = run_search(RunConfig(g, MarkedSet(g, {{0, 0}}), SelfLoopWeight(4.0 / 10000.0), 0, true));
    EXPECT_EQ(rec.stop_reason, StopReason::turn);
    EXPECT_GT(rec.pr_at_T, 0.9);
    EXPECT_GT(rec.overlap_at_T, 0.0);
    EXPECT_LT(rec.overlap_at_T, 0.05);
    const auto &ov = *rec.overlap_trace;
    EXPECT_GT(ov[static_cast<std::size_t>(rec.T)], ov[static_cast<std::size_t>(rec.T) - 1]);

    const auto strict =
        run_search(RunConfig(g, MarkedSet(g, {{0, 0}}), SelfLoopWeight(4.0 / 10000.0), 1500, false, StopRule::sign_change));
    EXPECT_TRUE(strict.stopped_by_cap);
}

TEST(RunSearch, TraceInvariants) {
    const GridSpec g(30);
    const auto marked = random_marked(g, 3, 42, true);
    const auto rec = run_search(RunConfig(g, marked, SelfLoopWeight(4.0 * 3 / 900.0), 0, true));
    ASSERT_TRUE(rec.overlap_trace && rec.prob_trace);
    ASSERT_EQ(rec.overlap_trace->size(), static_cast<std::size_t>(rec.T) + 1);
    EXPECT_EQ((*rec.overlap_trace)[0], 1.0);
    EXPECT_EQ(rec.pr_at_T, rec.prob_trace->back());
    for (double p : *rec.prob_trace) {
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0 + 1e-10);
    }
    for (double o : *rec.overlap_trace) {
        EXPECT_GE(o, -1.0 - 1e-10);
        EXPECT_LE(o, 1.0 + 1e-10);
    }
    if (rec.stop_reason == StopReason::sign_change) {
        for (int t = 0; t < rec.T; ++t) {
            EXPECT_GE((*rec.overlap_trace)[static_cast<std::size_t>(t)], 0.0);
        }
    }
    double best = 0.0;
    int best_t = 0;
    for (std::size_t t = 0; t < rec.prob_trace->size(); ++t) {
        if ((*rec.prob_trace)[t] > best) {
            best = (*rec.prob_trace)[t];
            best_t = static_cast<int>(t);
        }
    }
    EXPECT_EQ(rec.max_prob, best);
    EXPECT_EQ(rec.argmax_prob_step, best_t);
}

TEST(RunSearch, ExceptionalPairHitsCapBelowBound) {
    const GridSpec g(16);
    const double l = 4.0 / 256.0;
    const auto rec =
        run_search(RunConfig(g, MarkedSet(g, {{0, 0}, {1, 0}}), SelfLoopWeight(l), 2000, false, StopRule::sign_change));
    EXPECT_TRUE(rec.stopped_by_cap);
    EXPECT_EQ(rec.T, 2000);
    EXPECT_EQ(rec.stop_reason, StopReason::cap);
    EXPECT_LE(rec.max_prob, pm_upper_bound(g, SelfLoopWeight(l)));
}

TEST(RunSearch, FixedHorizonRunsAllSteps) {
    const GridSpec g(10);
    const auto rec =
        run_search(RunConfig(g, MarkedSet(g, {{0, 0}}), SelfLoopWeight(0.04), 50, true, StopRule::fixed_horizon));
    EXPECT_EQ(rec.T, 50);
    EXPECT_TRUE(rec.stopped_by_cap);
    EXPECT_EQ(rec.prob_trace->size(), 51u);
}

TEST(RunSearch, Deterministic) {
    const GridSpec g(40);
    const RunConfig cfg(g, MarkedSet(g, {{0, 0}, {5, 17}}), SelfLoopWeight(8.0 / 1600.0), 0, true);
    EXPECT_EQ(run_search(cfg), run_search(cfg));
}

TEST(Placements, RandomIsSeededAndAnchored) {
    const GridSpec g(50);
    const auto a = random_marked(g, 5, 9, true);
    const auto b = random_marked(g, 5, 9, true);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.contains({0, 0}));
    EXPECT_EQ(a.size(), 5u);
    EXPECT_NE(random_marked(g, 5, 10, false), a);
    EXPECT_THROW(random_marked(GridSpec(2), 5, 1, false), ConfigError);
}

TEST(Placements, BlockWraps) {
    const GridSpec g(5);
    const auto b = block_marked(g, 2, 3, {4, 4});
    EXPECT_EQ(b.size(), 6u);
    EXPECT_TRUE(b.contains({0, 0}));
    EXPECT_TRUE(b.contains({4, 1}));
    EXPECT_THROW(block_marked(g, 6, 1, {0, 0}), ConfigError);
}
