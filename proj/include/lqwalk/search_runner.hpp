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

/*
 * search_runner.hpp - the search loop and its stopping rule
 *
 * Starting from psi(0), apply the search step t = 1, 2, ... and watch the
 * overlap <psi(t)|psi(0)>. The walk is stopped at T and the success
 * probability is the marked probability of psi(T).
 *
 * Stopping rules:
 *   sign_change          T = first t with overlap < 0.
 *   sign_change_or_turn  T = first t with overlap < 0, or with overlap
 *                        larger than at t-1 (the overlap bottomed out above
 *                        zero). This is the rule the published tables follow;
 *                        for one marked vertex with l = 4/N the overlap
 *                        dips to ~0.006 and turns without changing sign.
 *   fixed_horizon        never stop early; run exactly max_steps.
 *
 * If no rule fires within max_steps the record has stopped_by_cap set and
 * T = max_steps.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grid_state.hpp"
#include "walk_operators.hpp"

namespace lqw {

enum class StopRule : std::uint8_t { sign_change, sign_change_or_turn, fixed_horizon };

enum class StopReason : std::uint8_t { sign_change, turn, cap };

constexpr const char *to_string(StopRule r) noexcept {
    switch (r) {
    case StopRule::sign_change:
        return "sign-change";
    case StopRule::sign_change_or_turn:
        return "sign-change-or-turn";
    case StopRule::fixed_horizon:
        return "fixed-horizon";
    }
    return "?";
}

constexpr const char *to_string(StopReason r) noexcept {
    switch (r) {
    case StopReason::sign_change:
        return "sign-change";
    case StopReason::turn:
        return "turn";
    case StopReason::cap:
        return "cap";
    }
    return "?";
}

/// ceil(10 sqrt(N ln N)); an order of magnitude above the expected stopping time.
inline int default_max_steps(const GridSpec &grid) {
    const auto n = static_cast<double>(grid.n_vertices());
    return static_cast<int>(std::ceil(10.0 * std::sqrt(n * std::log(n))));
}

struct RunConfig {
    GridSpec grid;
    MarkedSet marked;
    SelfLoopWeight l;
    int max_steps = 0; // <= 0 means default_max_steps(grid)
    bool record_traces = false;
    StopRule stop_rule = StopRule::sign_change_or_turn;

    RunConfig(GridSpec g, MarkedSet m, SelfLoopWeight w, int steps = 0, bool traces = false,
              StopRule rule = StopRule::sign_change_or_turn)
        : grid(g), marked(std::move(m)), l(w), max_steps(steps), record_traces(traces), stop_rule(rule) {}

    [[nodiscard]] int effective_max_steps() const { return max_steps > 0 ? max_steps : default_max_steps(grid); }
};

struct RunRecord {
    int side = 0;
    std::size_t n_vertices = 0;
    std::vector<Vertex> marked;
    double l = 0.0;
    StopRule stop_rule = StopRule::sign_change_or_turn;

    int T = 0;
    double pr_at_T = 0.0;
    bool stopped_by_cap = false;
    StopReason stop_reason = StopReason::cap;
    double overlap_at_T = 0.0;
    double max_prob = 0.0;
    int argmax_prob_step = 0;

    // Indexed by t = 0..T when recorded.
    std::optional<std::vector<double>> overlap_trace;
    std::optional<std::vector<double>> prob_trace;

    friend bool operator==(const RunRecord &, const RunRecord &) = default;
};

inline RunRecord run_search(const RunConfig &config) {
    if (config.marked.empty()) {
        throw ConfigError("run_search: marked set must be non-empty");
    }
    if (config.grid != config.marked.grid()) {
        throw ContractError("run_search: marked set belongs to a different grid");
    }
    const int max_steps = config.effective_max_steps();

    const WalkState psi0 = initial_state(config.grid, config.l);
    const CoinSpec coin(config.l);
    WalkState psi = psi0;

    RunRecord rec;
    rec.side = config.grid.side();
    rec.n_vertices = config.grid.n_vertices();
    rec.marked.assign(config.marked.coords().begin(), config.marked.coords().end());
    rec.l = config.l.value();
    rec.stop_rule = config.stop_rule;

    const double p0 = marked_probability(psi, config.marked);
    rec.max_prob = p0;
    rec.argmax_prob_step = 0;
    if (config.record_traces) {
        // psi(0) is normalized by construction.
        rec.overlap_trace.emplace().push_back(1.0);
        rec.prob_trace.emplace().push_back(p0);
    }

    double previous = 1.0;
    for (int t = 1; t <= max_steps; ++t) {
        step(psi, config.marked, coin);
        const double ov = overlap(psi, psi0);
        const double pr = marked_probability(psi, config.marked);
        if (pr > rec.max_prob) {
            rec.max_prob = pr;
            rec.argmax_prob_step = t;
        }
        if (config.record_traces) {
            rec.overlap_trace->push_back(ov);
            rec.prob_trace->push_back(pr);
        }
        rec.T = t;
        rec.pr_at_T = pr;
        rec.overlap_at_T = ov;

        if (config.stop_rule != StopRule::fixed_horizon) {
            if (ov < 0.0) {
                rec.stop_reason = StopReason::sign_change;
                return rec;
            }
            if (config.stop_rule == StopRule::sign_change_or_turn && ov > previous) {
                rec.stop_reason = StopReason::turn;
                return rec;
            }
        }
        previous = ov;
    }
    rec.stopped_by_cap = true;
    rec.stop_reason = StopReason::cap;
    return rec;
}

/// M_m = {(0, 10 i) : 0 <= i < m}.
inline MarkedSet make_Mm(int side, int m) {
    const GridSpec grid(side);
    if (m < 1) {
        throw ConfigError("make_Mm: m must be >= 1");
    }
    if (10 * (m - 1) >= side) {
        throw ConfigError("make_Mm: M_" + std::to_string(m) + " does not fit on a grid of side " +
                          std::to_string(side));
    }
    std::vector<Vertex> coords;
    coords.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        coords.push_back({0, 10 * i});
    }
    return MarkedSet(grid, std::move(coords));
}

} // namespace lqw
