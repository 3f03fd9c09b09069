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

// Searches for one marked vertex on a 100 x 100 torus with l = 4/N, then
// shows that the adjacent pair {(0,0),(1,0)} is an exceptional configuration.

#include <cstdio>

#include <lqwalk/lqwalk.hpp>

int main() {
    using namespace lqw;

    const GridSpec grid(100);
    const MarkedSet one(grid, {{0, 0}});
    const double l = weight_value(WeightFormula::wong(), grid.n_vertices(), 1);

    const auto rec = run_search(RunConfig(grid, one, SelfLoopWeight(l)));
    std::printf("single vertex: T=%d Pr=%.15g (stop: %s)\n", rec.T, rec.pr_at_T, to_string(rec.stop_reason));

    const MarkedSet pair(grid, {{0, 0}, {1, 0}});
    const auto matching = find_domino_matching(pair);
    const auto parts = initial_state_decomposition(grid, *matching, SelfLoopWeight(l));
    std::printf("adjacent pair: stationary residual %.3g, marked probability bound %.3g\n",
                verify_stationary(parts.stationary, pair), pm_upper_bound(grid, SelfLoopWeight(l)));

    const auto capped = run_search(RunConfig(grid, pair, SelfLoopWeight(l), 0, false, StopRule::sign_change));
    std::printf("adjacent pair: overlap never crosses zero (capped=%d after %d steps, max Pr %.3g)\n",
                capped.stopped_by_cap, capped.T, capped.max_prob);
    return 0;
}
