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
 * io.hpp - CSV and JSON records for runs, sweeps and stationary checks
 *
 * CSV layouts:
 *   run records   side,N,m,l,T,Pr,capped,max_prob,argmax_step
 *   sweeps        a,l,T,Pr,capped
 *
 * Reals are written in the shortest form that parses back to the same
 * double, so reading a file reconstructs the records exactly. Console output
 * uses format_15g() instead.
 *
 * JSON records need nlohmann/json on the include path.
 */

#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "search_runner.hpp"
#include "stationary.hpp"
#include "weight_tuner.hpp"

namespace lqw::io {

inline constexpr std::string_view kRunCsvHeader = "side,N,m,l,T,Pr,capped,max_prob,argmax_step";
inline constexpr std::string_view kSweepCsvHeader = "a,l,T,Pr,capped";

/// Shortest round-trip representation.
inline std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// 15 significant digits, for human-facing output.
inline std::string format_15g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

inline double parse_real(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ConfigError("csv: cannot parse real '" + std::string(s) + "'");
    }
    return v;
}

inline long long parse_int(std::string_view s) {
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ConfigError("csv: cannot parse integer '" + std::string(s) + "'");
    }
    return v;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

// Run records ---------------------------------------------------------------

struct RunCsvRow {
    int side = 0;
    std::size_t N = 0;
    std::size_t m = 0;
    double l = 0.0;
    int T = 0;
    double Pr = 0.0;
    bool capped = false;
    double max_prob = 0.0;
    int argmax_step = 0;

    friend bool operator==(const RunCsvRow &, const RunCsvRow &) = default;
};

inline RunCsvRow to_csv_row(const RunRecord &r) {
    return {r.side, r.n_vertices, r.marked.size(), r.l, r.T, r.pr_at_T, r.stopped_by_cap, r.max_prob, r.argmax_prob_step};
}

inline void write_run_csv(std::ostream &os, const std::vector<RunRecord> &records) {
    os << kRunCsvHeader << '\n';
    for (const auto &rec : records) {
        const auto r = to_csv_row(rec);
        os << r.side << ',' << r.N << ',' << r.m << ',' << format_real(r.l) << ',' << r.T << ',' << format_real(r.Pr)
           << ',' << (r.capped ? 1 : 0) << ',' << format_real(r.max_prob) << ',' << r.argmax_step << '\n';
    }
}

inline std::vector<RunCsvRow> read_run_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != kRunCsvHeader) {
        throw ConfigError("run csv: missing or unexpected header");
    }
    std::vector<RunCsvRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 9) {
            throw ConfigError("run csv: expected 9 fields, got " + std::to_string(f.size()));
        }
        rows.push_back({static_cast<int>(parse_int(f[0])), static_cast<std::size_t>(parse_int(f[1])),
                        static_cast<std::size_t>(parse_int(f[2])), parse_real(f[3]), static_cast<int>(parse_int(f[4])),
                        parse_real(f[5]), parse_int(f[6]) != 0, parse_real(f[7]), static_cast<int>(parse_int(f[8]))});
    }
    return rows;
}

// Sweeps --------------------------------------------------------------------

inline void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        os << format_real(r.a) << ',' << format_real(r.l) << ',' << r.T << ',' << format_real(r.Pr) << ','
           << (r.stopped_by_cap ? 1 : 0) << '\n';
    }
}

/// Parses a sweep CSV. The stop reason is not part of the CSV layout and is
/// reconstructed only as far as `capped` allows.
inline std::vector<SweepRow> read_sweep_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != kSweepCsvHeader) {
        throw ConfigError("sweep csv: missing or unexpected header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 5) {
            throw ConfigError("sweep csv: expected 5 fields, got " + std::to_string(f.size()));
        }
        SweepRow r;
        r.a = parse_real(f[0]);
        r.l = parse_real(f[1]);
        r.T = static_cast<int>(parse_int(f[2]));
        r.Pr = parse_real(f[3]);
        r.stopped_by_cap = parse_int(f[4]) != 0;
        r.reason = r.stopped_by_cap ? StopReason::cap : StopReason::sign_change;
        rows.push_back(r);
    }
    return rows;
}

// JSON records --------------------------------------------------------------

inline nlohmann::json marked_to_json(std::span<const Vertex> coords) {
    auto arr = nlohmann::json::array();
    for (const auto &v : coords) {
        arr.push_back({v.x, v.y});
    }
    return arr;
}

inline nlohmann::json to_json(const RunRecord &r) {
    nlohmann::json j{{"side", r.side},
                     {"N", r.n_vertices},
                     {"m", r.marked.size()},
                     {"marked", marked_to_json(r.marked)},
                     {"l", r.l},
                     {"stop_rule", to_string(r.stop_rule)},
                     {"T", r.T},
                     {"Pr", r.pr_at_T},
                     {"stopped_by_cap", r.stopped_by_cap},
                     {"stop_reason", to_string(r.stop_reason)},
                     {"overlap_at_T", r.overlap_at_T},
                     {"max_prob", r.max_prob},
                     {"argmax_prob_step", r.argmax_prob_step}};
    if (r.overlap_trace) {
        j["overlap_trace"] = *r.overlap_trace;
    }
    if (r.prob_trace) {
        j["prob_trace"] = *r.prob_trace;
    }
    return j;
}

inline nlohmann::json to_json(const SweepRow &r) {
    return {{"a", r.a}, {"l", r.l}, {"T", r.T}, {"Pr", r.Pr}, {"capped", r.stopped_by_cap},
            {"stop_reason", to_string(r.reason)}};
}

inline nlohmann::json to_json(const std::vector<SweepRow> &rows) {
    auto arr = nlohmann::json::array();
    for (const auto &r : rows) {
        arr.push_back(to_json(r));
    }
    return arr;
}

inline nlohmann::json to_json(const OptimizeResult &r) {
    return {{"a_opt", r.a_opt}, {"l", r.l},         {"T", r.T},
            {"Pr", r.Pr},       {"capped", r.stopped_by_cap}, {"found_eligible", r.found_eligible},
            {"evaluated", to_json(r.evaluated)}};
}

inline nlohmann::json stationary_report(const StationaryState &s, double residual) {
    auto pairs = nlohmann::json::array();
    for (const auto &d : s.matching.pairs()) {
        pairs.push_back({{d.first.x, d.first.y}, {d.second.x, d.second.y}});
    }
    return {{"pairs", pairs}, {"a", s.a}, {"l", s.l.value()}, {"residual", residual}};
}

} // namespace lqw::io
