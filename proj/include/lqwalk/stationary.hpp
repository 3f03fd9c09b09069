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
 * stationary.hpp - exceptional configurations of the lackadaisical walk
 *
 * If the marked set can be tiled by dominoes (pairs of torus-adjacent
 * vertices), the search step has a 1-eigenvector:
 *
 *   every vertex carries a * (1, 1, 1, 1, sqrt(l)),
 *   and on each domino the two arrows facing across the shared edge carry
 *   -(3 + l) * a instead of a.
 *
 * At a marked vertex the coin block is then orthogonal to |s_c>, so C undoes
 * the sign flip of Q, and the shift only exchanges equal amplitudes. The
 * initial state is this state (with a = 1/sqrt((4+l)N)) plus a leftover of
 * (4+l) a on the facing arrows, so the marked probability stays O(1/N).
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "grid_state.hpp"
#include "walk_operators.hpp"

namespace lqw {

/// Arrow at `from` pointing across an edge to `to`, if they are torus-adjacent.
/// On side 2 two edges join the same pair; right/up are preferred.
inline std::optional<Coin> direction_towards(const GridSpec &grid, Vertex from, Vertex to) {
    for (Coin c : {Coin::right, Coin::left, Coin::up, Coin::down}) {
        if (grid.neighbour(from, c) == to && from != to) {
            return c;
        }
    }
    return std::nullopt;
}

struct Domino {
    Vertex first;
    Vertex second;

    friend bool operator==(const Domino &, const Domino &) = default;
};

/// Perfect matching of a marked set into adjacent pairs.
class DominoMatching {
  public:
    DominoMatching(const GridSpec &grid, std::vector<Domino> pairs)
        : pairs_(std::move(pairs)), covers_(grid, endpoints(grid, pairs_)) {}

    [[nodiscard]] std::span<const Domino> pairs() const noexcept { return pairs_; }
    [[nodiscard]] const MarkedSet &covers() const noexcept { return covers_; }
    [[nodiscard]] const GridSpec &grid() const noexcept { return covers_.grid(); }

  private:
    static std::vector<Vertex> endpoints(const GridSpec &grid, const std::vector<Domino> &pairs) {
        std::vector<Vertex> out;
        out.reserve(2 * pairs.size());
        for (const auto &d : pairs) {
            if (!grid.contains(d.first) || !grid.contains(d.second)) {
                throw ConstructionError("DominoMatching: pair endpoint outside grid");
            }
            if (!direction_towards(grid, d.first, d.second)) {
                throw ConstructionError("DominoMatching: (" + std::to_string(d.first.x) + "," +
                                        std::to_string(d.first.y) + ") and (" + std::to_string(d.second.x) +
                                        "," + std::to_string(d.second.y) + ") are not adjacent");
            }
            out.push_back(d.first);
            out.push_back(d.second);
        }
        std::vector<Vertex> sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ConstructionError("DominoMatching: a vertex appears in more than one pair");
        }
        return out;
    }

    std::vector<Domino> pairs_;
    MarkedSet covers_;
};

struct StationaryState {
    WalkState state; // not normalized
    double a = 0.0;
    DominoMatching matching;
    SelfLoopWeight l;
};

/// Max-abs residual of one search step on `state`. No consistency checks;
/// use this to probe a state against an arbitrary marked set.
inline double step_residual(const WalkState &state, const MarkedSet &marked, SelfLoopWeight l) {
    WalkState moved = state;
    step(moved, marked, CoinSpec(l));
    double worst = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        worst = std::max(worst, std::abs(moved[i] - state[i]));
    }
    return worst;
}

/// ||U' phi - phi||_inf where U' marks exactly the matched vertices.
inline double verify_stationary(const StationaryState &stationary, const MarkedSet &marked) {
    if (!(marked == stationary.matching.covers())) {
        throw ContractError("verify_stationary: marked set differs from the matched vertices");
    }
    return step_residual(stationary.state, marked, stationary.l);
}

inline constexpr double kStationaryTolerance = 1e-12;

inline StationaryState build_stationary(const GridSpec &grid, const DominoMatching &matching, SelfLoopWeight l,
                                        double a, bool verify = false) {
    if (matching.grid() != grid) {
        throw ConstructionError("build_stationary: matching belongs to a different grid");
    }
    const double lv = l.value();
    std::vector<double> amp(grid.n_amplitudes());
    const double loop = a * std::sqrt(lv);
    for (std::size_t base = 0; base < amp.size(); base += kCoinDim) {
        amp[base + 0] = a;
        amp[base + 1] = a;
        amp[base + 2] = a;
        amp[base + 3] = a;
        amp[base + 4] = loop;
    }
    const double facing = a - (4.0 + lv) * a;
    for (const auto &d : matching.pairs()) {
        const Coin towards = *direction_towards(grid, d.first, d.second);
        amp[flat_index(grid, d.first.x, d.first.y, towards)] = facing;
        amp[flat_index(grid, d.second.x, d.second.y, opposite(towards))] = facing;
    }
    StationaryState out{WalkState::unchecked(grid, std::move(amp)), a, matching, l};
    if (verify) {
        const double r = verify_stationary(out, matching.covers());
        if (r > kStationaryTolerance) {
            throw ConstructionError("build_stationary: residual " + std::to_string(r) + " above tolerance");
        }
    }
    return out;
}

/// Perfect matching on the torus-adjacency graph of the marked vertices, or
/// nullopt if none exists. Uses Edmonds' blossom algorithm, so odd sides
/// (non-bipartite torus) are handled too.
inline std::optional<DominoMatching> find_domino_matching(const MarkedSet &marked) {
    const auto &grid = marked.grid();
    const auto coords = marked.coords();
    const std::size_t n = coords.size();
    if (n == 0 || n % 2 != 0) {
        return std::nullopt;
    }
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(n);
    std::map<Vertex, std::size_t> id;
    for (std::size_t i = 0; i < n; ++i) {
        id.emplace(coords[i], i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> seen;
        for (Coin c : {Coin::up, Coin::down, Coin::left, Coin::right}) {
            const auto it = id.find(grid.neighbour(coords[i], c));
            if (it != id.end() && it->second > i && seen.insert(it->second).second) {
                boost::add_edge(i, it->second, g);
            }
        }
    }
    std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(g, mate.data());
    if (2 * boost::matching_size(g, mate.data()) != n) {
        return std::nullopt;
    }
    std::vector<Domino> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        if (mate[i] > i) {
            pairs.push_back({coords[i], coords[mate[i]]});
        }
    }
    return DominoMatching(grid, std::move(pairs));
}

struct InitialDecomposition {
    StationaryState stationary;
    WalkState leftover; // psi(0) - stationary, supported on the facing arrows
};

/// psi(0) = phi_stat(a) + (4+l) a (facing arrows), a = 1/sqrt((4+l)N).
inline InitialDecomposition initial_state_decomposition(const GridSpec &grid, const DominoMatching &matching,
                                                        SelfLoopWeight l) {
    const double lv = l.value();
    const double a = 1.0 / std::sqrt((4.0 + lv) * static_cast<double>(grid.n_vertices()));
    auto stationary = build_stationary(grid, matching, l, a);
    WalkState leftover = WalkState::zeros(grid);
    const double bump = (4.0 + lv) * a;
    for (const auto &d : matching.pairs()) {
        const Coin towards = *direction_towards(grid, d.first, d.second);
        leftover.at(d.first, towards) = bump;
        leftover.at(d.second, opposite(towards)) = bump;
    }
    return {std::move(stationary), std::move(leftover)};
}

/// Upper bound on the marked probability for an adjacent marked pair:
///   6a^2 + 2 l a^2 + 2 ((3+l) a + alpha)^2,  alpha = sqrt(2) (4+l) a,
/// with a = 1/sqrt((4+l)N). The 6a^2 term is the three untouched arrows at
/// each of the two marked vertices.
inline double pm_upper_bound(const GridSpec &grid, SelfLoopWeight l) {
    const double lv = l.value();
    const double a = 1.0 / std::sqrt((4.0 + lv) * static_cast<double>(grid.n_vertices()));
    const double alpha = std::sqrt(2.0) * (4.0 + lv) * a;
    const double beta = alpha;
    const double loop = a * std::sqrt(lv);
    const double fa = -(3.0 + lv) * a - alpha;
    const double fb = -(3.0 + lv) * a - beta;
    return 6.0 * a * a + 2.0 * loop * loop + fa * fa + fb * fb;
}

} // namespace lqw
