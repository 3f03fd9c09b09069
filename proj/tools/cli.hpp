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
 * cli.hpp - the lqwalk command line, as a callable function
 *
 *   lqwalk run        --side S --marked <placement> --weight <w> [...]
 *   lqwalk sweep      --side S --marked <placement> --a-min A --a-max B --a-step D
 *   lqwalk optimize   --side S --marked <placement> [--resolution R]
 *   lqwalk stationary --side S --marked <placement> [--weight <w>]
 *   lqwalk reproduce  table1|table1-triples|table2|table3|table4|fig2|fig3|all
 *
 * Placements: explicit "x,y" tokens, "Mm:<m>", "random:<m>" (with --seed
 * and --anchored), or "block:<w>x<h>[@x,y]".
 * Weights: wong, saha, saha-truncated, 4m, 4m-sqrtm, a:<value>.
 *
 * Exit codes: 0 ok, 2 configuration error, 3 step cap reached without a
 * stop (possible exceptional configuration), 4 no perfect matching,
 * 5 verification failed.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <lqwalk/io.hpp>
#include <lqwalk/lqwalk.hpp>
#include <lqwalk/reproduce.hpp>

namespace lqw::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kCapStop = 3, kNoMatching = 4, kVerifyFailed = 5 };

struct PlacementArgs {
    std::vector<std::string> tokens;
    std::uint64_t seed = 0;
    bool anchored = false;
};

inline int parse_int_token(const std::string &s, const std::string &what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ConfigError("cannot parse " + what + " from '" + s + "'");
    }
}

inline Vertex parse_vertex(const std::string &tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) {
        throw ConfigError("expected x,y but got '" + tok + "'");
    }
    return {parse_int_token(tok.substr(0, comma), "x"), parse_int_token(tok.substr(comma + 1), "y")};
}

inline MarkedSet resolve_placement(const GridSpec &grid, const PlacementArgs &p) {
    if (p.tokens.empty()) {
        throw ConfigError("--marked is required");
    }
    const std::string &first = p.tokens.front();
    const auto starts = [&](const char *prefix) { return first.rfind(prefix, 0) == 0; };
    if (p.tokens.size() == 1 && starts("Mm:")) {
        return make_Mm(grid.side(), parse_int_token(first.substr(3), "m"));
    }
    if (p.tokens.size() == 1 && starts("random:")) {
        return random_marked(grid, parse_int_token(first.substr(7), "m"), p.seed, p.anchored);
    }
    if (p.tokens.size() == 1 && starts("block:")) {
        std::string body = first.substr(6);
        Vertex origin{0, 0};
        if (const auto at = body.find('@'); at != std::string::npos) {
            origin = parse_vertex(body.substr(at + 1));
            body = body.substr(0, at);
        }
        const auto x = body.find('x');
        if (x == std::string::npos) {
            throw ConfigError("block placement must look like block:<w>x<h>[@x,y]");
        }
        return block_marked(grid, parse_int_token(body.substr(0, x), "block width"),
                            parse_int_token(body.substr(x + 1), "block height"), origin);
    }
    std::vector<Vertex> coords;
    for (const auto &tok : p.tokens) {
        coords.push_back(parse_vertex(tok));
    }
    return MarkedSet(grid, std::move(coords));
}

inline WeightFormula parse_weight(const std::string &name) {
    if (name == "wong") {
        return WeightFormula::wong();
    }
    if (name == "saha") {
        return WeightFormula::saha();
    }
    if (name == "saha-truncated") {
        return WeightFormula::saha_truncated();
    }
    if (name == "4m") {
        return WeightFormula::four_m();
    }
    if (name == "4m-sqrtm") {
        return WeightFormula::four_m_minus_sqrt_m();
    }
    if (name.rfind("a:", 0) == 0) {
        try {
            return WeightFormula::custom_a(std::stod(name.substr(2)));
        } catch (const std::logic_error &) {
            throw ConfigError("cannot parse weight '" + name + "'");
        }
    }
    throw ConfigError("unknown weight '" + name + "' (wong, saha, saha-truncated, 4m, 4m-sqrtm, a:<value>)");
}

inline StopRule parse_stop_rule(const std::string &name) {
    if (name == "sign-change") {
        return StopRule::sign_change;
    }
    if (name == "sign-change-or-turn") {
        return StopRule::sign_change_or_turn;
    }
    if (name == "fixed-horizon") {
        return StopRule::fixed_horizon;
    }
    throw ConfigError("unknown stop rule '" + name + "'");
}

struct OutputArgs {
    std::string path;
    std::string format = "csv";
};

/// Writes `body` to the output path, or to `fallback` when no path is set.
inline void emit(const OutputArgs &out, const std::string &body, std::ostream &fallback) {
    if (out.path.empty()) {
        fallback << body;
        return;
    }
    std::ofstream f(out.path);
    if (!f) {
        throw ConfigError("cannot open output file '" + out.path + "'");
    }
    f << body;
}

inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Lackadaisical quantum walk search on the 2D torus"};
    app.require_subcommand(1);

    int side = 0;
    PlacementArgs placement;
    std::string weight = "wong";
    int max_steps = 0;
    std::string stop_rule = "sign-change-or-turn";
    OutputArgs output;
    unsigned threads = 0;

    const auto add_common = [&](CLI::App *cmd, bool with_weight) {
        cmd->add_option("--side", side, "vertices per dimension")->required();
        cmd->add_option("--marked", placement.tokens, "x,y ... | Mm:<m> | random:<m> | block:<w>x<h>[@x,y]")
            ->required()
            ->expected(1, -1);
        cmd->add_option("--seed", placement.seed, "seed for random placements");
        cmd->add_flag("--anchored", placement.anchored, "random placement always contains (0,0)");
        if (with_weight) {
            cmd->add_option("--weight", weight, "wong | saha | saha-truncated | 4m | 4m-sqrtm | a:<value>");
        }
        cmd->add_option("--output", output.path, "output file (default stdout)");
        cmd->add_option("--format", output.format, "csv | records")->check(CLI::IsMember({"csv", "records"}));
    };

    auto *run = app.add_subcommand("run", "single search run");
    add_common(run, true);
    bool traces = false;
    run->add_option("--max-steps", max_steps, "step cap (default ceil(10 sqrt(N ln N)))");
    run->add_option("--stop-rule", stop_rule, "sign-change | sign-change-or-turn | fixed-horizon");
    run->add_flag("--traces", traces, "include overlap/probability traces in records output");

    auto *sweep = app.add_subcommand("sweep", "success probability over l = 4a/N");
    add_common(sweep, false);
    double a_min = 0.0;
    double a_max = 0.0;
    double a_step = 0.05;
    sweep->add_option("--a-min", a_min)->required();
    sweep->add_option("--a-max", a_max)->required();
    sweep->add_option("--a-step", a_step);
    sweep->add_option("--max-steps", max_steps);
    sweep->add_option("--threads", threads);

    auto *optimize = app.add_subcommand("optimize", "coarse-to-fine search for the best a");
    add_common(optimize, false);
    double resolution = 0.01;
    bool any_stop = false;
    optimize->add_option("--resolution", resolution);
    optimize->add_option("--threads", threads);
    optimize->add_flag("--any-stop", any_stop, "let turn-stopped runs win, not only sign changes");

    auto *stationary = app.add_subcommand("stationary", "domino stationary state check");
    add_common(stationary, true);

    auto *reproduce = app.add_subcommand("reproduce", "rerun a reference table or figure");
    std::string artifact;
    reproduce->add_option("artifact", artifact, "table1 | table1-triples | table2 | table3 | table4 | fig2 | fig3 | all")
        ->required();
    reproduce->add_option("--output", output.path, "CSV output file (default <artifact>.csv)");
    reproduce->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (*run) {
            const GridSpec grid(side);
            const auto marked = resolve_placement(grid, placement);
            const double l = weight_value(parse_weight(weight), grid.n_vertices(), static_cast<int>(marked.size()));
            const RunConfig cfg(grid, marked, SelfLoopWeight(l), max_steps, traces, parse_stop_rule(stop_rule));
            const auto rec = run_search(cfg);
            out << "T=" << rec.T << " Pr=" << io::format_15g(rec.pr_at_T) << '\n';
            if (!output.path.empty()) {
                std::ostringstream body;
                if (output.format == "records") {
                    body << io::to_json(rec).dump(2) << '\n';
                } else {
                    io::write_run_csv(body, {rec});
                }
                emit(output, body.str(), out);
            }
            if (rec.stopped_by_cap) {
                err << "no overlap zero-crossing within " << cfg.effective_max_steps()
                    << " steps; possible exceptional configuration\n";
                return kCapStop;
            }
            return kOk;
        }
        if (*sweep) {
            const GridSpec grid(side);
            const auto marked = resolve_placement(grid, placement);
            const auto res = sweep_a(grid, marked, a_min, a_max, a_step, SweepOptions{threads, StopRule::sign_change_or_turn, max_steps});
            std::ostringstream body;
            if (output.format == "records") {
                body << io::to_json(res.rows).dump(2) << '\n';
            } else {
                io::write_sweep_csv(body, res.rows);
            }
            emit(output, body.str(), out);
            return kOk;
        }
        if (*optimize) {
            const GridSpec grid(side);
            const auto marked = resolve_placement(grid, placement);
            const auto res = optimize_a(grid, marked, resolution, OptimizeOptions{threads, 0, !any_stop});
            out << "a_opt=" << io::format_15g(res.a_opt) << " T=" << res.T << " Pr=" << io::format_15g(res.Pr) << '\n';
            if (!output.path.empty()) {
                std::ostringstream body;
                if (output.format == "records") {
                    body << io::to_json(res).dump(2) << '\n';
                } else {
                    io::write_sweep_csv(body, res.evaluated);
                }
                emit(output, body.str(), out);
            }
            return kOk;
        }
        if (*stationary) {
            const GridSpec grid(side);
            const auto marked = resolve_placement(grid, placement);
            const auto matching = find_domino_matching(marked);
            if (!matching) {
                out << "no perfect matching\n";
                return kNoMatching;
            }
            const double l = weight_value(parse_weight(weight), grid.n_vertices(), static_cast<int>(marked.size()));
            const auto parts = initial_state_decomposition(grid, *matching, SelfLoopWeight(l));
            const double residual = verify_stationary(parts.stationary, marked);
            out << "matching found; residual " << io::format_15g(residual) << '\n';
            for (const auto &d : matching->pairs()) {
                out << "  pair (" << d.first.x << "," << d.first.y << ")-(" << d.second.x << "," << d.second.y << ")\n";
            }
            auto report = io::stationary_report(parts.stationary, residual);
            if (marked.size() == 2) {
                const double bound = pm_upper_bound(grid, SelfLoopWeight(l));
                out << "pm bound " << io::format_15g(bound) << '\n';
                report["pm_upper_bound"] = bound;
            }
            if (!output.path.empty()) {
                emit(output, report.dump(2) + "\n", out);
            }
            return residual <= kStationaryTolerance ? kOk : kVerifyFailed;
        }
        if (*reproduce) {
            const auto &table = repro::artifacts();
            std::vector<std::string> names;
            if (artifact == "all") {
                for (const auto &[name, fn] : table) {
                    names.push_back(name);
                }
            } else if (table.contains(artifact)) {
                names.push_back(artifact);
            } else {
                throw ConfigError("unknown artifact '" + artifact + "'");
            }
            bool ok = true;
            for (const auto &name : names) {
                const auto rep = table.at(name)(repro::Options{threads});
                for (const auto &c : rep.cells) {
                    out << (c.pass() ? "PASS " : "FAIL ") << rep.artifact << " [" << c.row << "] " << c.column
                        << " expected=" << io::format_15g(c.expected) << " actual=" << io::format_15g(c.actual)
                        << " tol=" << c.tolerance << '\n';
                }
                std::ostringstream body;
                body << rep.csv_header << '\n';
                for (const auto &row : rep.csv_rows) {
                    body << row << '\n';
                }
                OutputArgs target{output.path.empty() || names.size() > 1 ? name + ".csv" : output.path, "csv"};
                emit(target, body.str(), out);
                out << rep.artifact << ": " << (rep.all_pass() ? "all cells pass" : "MISMATCH") << " (csv -> "
                    << target.path << ")\n";
                ok = ok && rep.all_pass();
            }
            return ok ? kOk : kVerifyFailed;
        }
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ContractError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ConstructionError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

} // namespace lqw::cli
