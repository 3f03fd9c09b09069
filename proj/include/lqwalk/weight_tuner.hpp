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
 * weight_tuner.hpp - self-loop weight formulas and the l = 4a/N experiments
 *
 * Weights are expressed as l = 4a/N. The named formulas are
 *
 *   wong                 a = 1
 *   saha                 a = 1 / (m + sqrt(m)/2)
 *   saha_truncated       a = 1 / (m + floor(floor(sqrt(m)) / 2))
 *   four_m               a = m
 *   four_m_minus_sqrt_m  a = m - sqrt(m)
 *   custom(a)            a
 *
 * saha_truncated evaluates sqrt(m)/2 in integer arithmetic. It is the
 * variant that reproduces the published block-weight column (for m = 1 it
 * coincides with wong, which the real-valued formula does not).
 *
 * sweep_a() evaluates run_search on a lattice of a values; optimize_a() does
 * a coarse-to-fine lattice search for the a that maximizes the success
 * probability. By default only runs whose overlap actually crosses zero are
 * eligible as the optimum: past the largest such a the overlap turns before
 * reaching zero, and the published optimal-a table follows that boundary.
 * Lattice points are independent runs and are evaluated on a
 * small worker pool; results are assembled in a-order, so output does not
 * depend on the number of threads.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grid_state.hpp"
#include "parallel.hpp"
#include "search_runner.hpp"

namespace lqw {

class WeightFormula {
  public:
    enum class Kind : std::uint8_t { wong, saha, saha_truncated, four_m, four_m_minus_sqrt_m, custom };

    static WeightFormula wong() { return WeightFormula(Kind::wong, 1.0); }
    static WeightFormula saha() { return WeightFormula(Kind::saha, 0.0); }
    static WeightFormula saha_truncated() { return WeightFormula(Kind::saha_truncated, 0.0); }
    static WeightFormula four_m() { return WeightFormula(Kind::four_m, 0.0); }
    static WeightFormula four_m_minus_sqrt_m() { return WeightFormula(Kind::four_m_minus_sqrt_m, 0.0); }
    static WeightFormula custom_a(double a) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw ConfigError("custom_a: a must be a positive finite number");
        }
        return WeightFormula(Kind::custom, a);
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    /// The multiplier a in l = 4a/N.
    [[nodiscard]] double a_factor(int m) const {
        if (m < 1) {
            throw ConfigError("weight formula: m must be >= 1");
        }
        const double md = m;
        switch (kind_) {
        case Kind::wong:
            return 1.0;
        case Kind::saha:
            return 1.0 / (md + std::sqrt(md) / 2.0);
        case Kind::saha_truncated: {
            int root = static_cast<int>(std::sqrt(md));
            while ((root + 1) * (root + 1) <= m) {
                ++root;
            }
            while (root * root > m) {
                --root;
            }
            return 1.0 / static_cast<double>(m + root / 2);
        }
        case Kind::four_m:
            return md;
        case Kind::four_m_minus_sqrt_m:
            return md - std::sqrt(md);
        case Kind::custom:
            return a_;
        }
        return 1.0;
    }

    [[nodiscard]] std::string name() const {
        switch (kind_) {
        case Kind::wong:
            return "wong";
        case Kind::saha:
            return "saha";
        case Kind::saha_truncated:
            return "saha-truncated";
        case Kind::four_m:
            return "4m";
        case Kind::four_m_minus_sqrt_m:
            return "4m-sqrtm";
        case Kind::custom:
            return "a=" + std::to_string(a_);
        }
        return "?";
    }

  private:
    WeightFormula(Kind k, double a) : kind_(k), a_(a) {}
    Kind kind_;
    double a_;
};

/// Self-loop weight l for a grid of N vertices with m marked vertices.
inline double weight_value(const WeightFormula &formula, std::size_t n_vertices, int m) {
    if (n_vertices < 4) {
        throw ConfigError("weight_value: N must be >= 4");
    }
    double l = 4.0 * formula.a_factor(m) / static_cast<double>(n_vertices);
    // m - sqrt(m) is exactly 0 at m = 1 but guard against a -0.0 or tiny
    // negative from rounding at perfect squares.
    return l < 0.0 ? 0.0 : l;
}

/// l = 4a/N for an explicit multiplier.
inline double weight_for_a(double a, std::size_t n_vertices) { return 4.0 * a / static_cast<double>(n_vertices); }

struct SweepRow {
    double a = 0.0;
    double l = 0.0;
    int T = 0;
    double Pr = 0.0;
    bool stopped_by_cap = false;
    StopReason reason = StopReason::cap;

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

struct SweepResult {
    std::vector<SweepRow> rows; // strictly increasing a
};

struct SweepOptions {
    unsigned threads = 0; // 0 = hardware concurrency
    StopRule stop_rule = StopRule::sign_change_or_turn;
    int max_steps = 0; // 0 = default_max_steps
};

namespace detail {

inline SweepRow evaluate_a(const GridSpec &grid, const MarkedSet &marked, double a, const SweepOptions &opts) {
    const double l = weight_for_a(a, grid.n_vertices());
    const RunConfig cfg(grid, marked, SelfLoopWeight(l), opts.max_steps, false, opts.stop_rule);
    const RunRecord rec = run_search(cfg);
    return {a, l, rec.T, rec.pr_at_T, rec.stopped_by_cap, rec.stop_reason};
}

/// Evaluate every a in `as`; output[i] corresponds to as[i].
inline std::vector<SweepRow> evaluate_all(const GridSpec &grid, const MarkedSet &marked, const std::vector<double> &as,
                                          const SweepOptions &opts) {
    return parallel_map(as.size(), opts.threads, [&](std::size_t i) { return evaluate_a(grid, marked, as[i], opts); });
}

} // namespace detail

/// Lattice a_k = a_min + k * step_a for all a_k <= a_max (+1e-9 slack).
/// a_min == a_max gives a single point.
inline SweepResult sweep_a(const GridSpec &grid, const MarkedSet &marked, double a_min, double a_max, double step_a,
                           const SweepOptions &opts = {}) {
    if (!(a_min > 0.0) || a_max < a_min) {
        throw ConfigError("sweep_a: need 0 < a_min <= a_max");
    }
    if (!(step_a > 0.0)) {
        throw ConfigError("sweep_a: step must be positive");
    }
    const auto count = static_cast<std::size_t>(std::floor((a_max - a_min) / step_a + 1e-9)) + 1;
    std::vector<double> as(count);
    for (std::size_t k = 0; k < count; ++k) {
        as[k] = a_min + static_cast<double>(k) * step_a;
    }
    return {detail::evaluate_all(grid, marked, as, opts)};
}

struct OptimizeOptions {
    unsigned threads = 0;
    int max_steps = 0;
    /// Only rows that stopped on a genuine sign change may win. When false,
    /// any row that did not hit the step cap is eligible.
    bool require_sign_change = true;
};

struct OptimizeResult {
    double a_opt = 0.0;
    double l = 0.0;
    int T = 0;
    double Pr = 0.0;
    bool stopped_by_cap = false;
    bool found_eligible = false;     // false: no lattice point qualified, best Pr overall reported
    std::vector<SweepRow> evaluated; // every lattice point visited, sorted by a
};

/// Coarse-to-fine maximization of Pr over eligible lattice points. The coarse lattice has step 0.25
/// on [0.25, 2m]; each refinement divides the step by 5 (never below
/// `resolution`) and rescans +-1 previous step around the incumbent. All
/// lattice points are multiples of `resolution`. Ties go to the smaller a.
inline OptimizeResult optimize_a(const GridSpec &grid, const MarkedSet &marked, double resolution,
                                 const OptimizeOptions &options = {}) {
    if (!(resolution >= 0.01)) {
        throw ConfigError("optimize_a: resolution must be >= 0.01");
    }
    if (marked.empty()) {
        throw ConfigError("optimize_a: marked set must be non-empty");
    }
    const auto m = static_cast<double>(marked.size());
    const SweepOptions opts{options.threads, StopRule::sign_change_or_turn, options.max_steps};
    const auto eligible = [&](const SweepRow &r) {
        return options.require_sign_change ? r.reason == StopReason::sign_change : !r.stopped_by_cap;
    };
    // Work in integer units of `resolution` so revisited points compare equal.
    const auto to_units = [&](double a) { return static_cast<std::int64_t>(std::llround(a / resolution)); };
    const auto to_a = [&](std::int64_t u) { return static_cast<double>(u) * resolution; };

    std::map<std::int64_t, SweepRow> seen;
    const auto visit = [&](std::vector<std::int64_t> units) {
        std::vector<double> fresh;
        std::vector<std::int64_t> fresh_units;
        for (auto u : units) {
            if (u >= 1 && !seen.contains(u)) {
                fresh_units.push_back(u);
                fresh.push_back(to_a(u));
                seen.emplace(u, SweepRow{});
            }
        }
        const auto rows = detail::evaluate_all(grid, marked, fresh, opts);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            seen[fresh_units[i]] = rows[i];
        }
    };
    // Strictly-greater comparison in increasing a keeps ties on the smaller a.
    const auto best_unit = [&] {
        auto best = seen.end();
        for (auto it = seen.begin(); it != seen.end(); ++it) {
            if (eligible(it->second) && (best == seen.end() || it->second.Pr > best->second.Pr)) {
                best = it;
            }
        }
        if (best == seen.end()) {
            best = seen.begin();
            for (auto it = seen.begin(); it != seen.end(); ++it) {
                if (it->second.Pr > best->second.Pr) {
                    best = it;
                }
            }
        }
        return best->first;
    };

    std::int64_t step_units = std::max<std::int64_t>(1, to_units(0.25));
    {
        std::vector<std::int64_t> coarse;
        const std::int64_t hi = to_units(2.0 * m);
        for (std::int64_t u = step_units; u <= hi; u += step_units) {
            coarse.push_back(u);
        }
        visit(std::move(coarse));
    }
    while (step_units > 1) {
        const std::int64_t finer = std::max<std::int64_t>(1, step_units / 5);
        const std::int64_t centre = best_unit();
        std::vector<std::int64_t> local;
        for (std::int64_t u = centre - step_units; u <= centre + step_units; u += finer) {
            local.push_back(u);
        }
        visit(std::move(local));
        step_units = finer;
    }

    OptimizeResult out;
    for (const auto &[u, row] : seen) {
        out.evaluated.push_back(row);
    }
    const SweepRow &best = seen.at(best_unit());
    out.a_opt = best.a;
    out.l = best.l;
    out.T = best.T;
    out.Pr = best.Pr;
    out.stopped_by_cap = best.stopped_by_cap;
    out.found_eligible = eligible(best);
    return out;
}

} // namespace lqw
