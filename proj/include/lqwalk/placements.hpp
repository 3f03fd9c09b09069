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

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "grid_state.hpp"
#include "search_runner.hpp"

namespace lqw {

namespace detail {

// Unbiased draw in [0, bound) from mt19937_64. std::uniform_int_distribution
// is implementation-defined, which would make seeded placements differ
// between standard libraries.
inline std::uint64_t draw_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
    std::uint64_t r = rng();
    while (r >= limit) {
        r = rng();
    }
    return r % bound;
}

} // namespace detail

/// m distinct vertices drawn with a seeded mt19937_64. With `anchored` the
/// first vertex is (0,0) and the remaining m-1 are random, which is how the
/// two- and three-vertex random tables were set up.
inline MarkedSet random_marked(const GridSpec &grid, int m, std::uint64_t seed, bool anchored) {
    if (m < 1 || static_cast<std::size_t>(m) > grid.n_vertices()) {
        throw ConfigError("random_marked: m out of range");
    }
    std::mt19937_64 rng(seed);
    std::set<Vertex> chosen;
    std::vector<Vertex> coords;
    if (anchored) {
        chosen.insert({0, 0});
        coords.push_back({0, 0});
    }
    const auto side = static_cast<std::uint64_t>(grid.side());
    while (coords.size() < static_cast<std::size_t>(m)) {
        const Vertex v{static_cast<int>(detail::draw_below(rng, side)), static_cast<int>(detail::draw_below(rng, side))};
        if (chosen.insert(v).second) {
            coords.push_back(v);
        }
    }
    return MarkedSet(grid, std::move(coords));
}

/// Axis-aligned w x h block with lower-left corner at origin (wraps on the torus).
inline MarkedSet block_marked(const GridSpec &grid, int w, int h, Vertex origin) {
    if (w < 1 || h < 1 || w > grid.side() || h > grid.side()) {
        throw ConfigError("block_marked: block does not fit on the grid");
    }
    if (!grid.contains(origin)) {
        throw ConfigError("block_marked: origin outside grid");
    }
    std::vector<Vertex> coords;
    for (int dy = 0; dy < h; ++dy) {
        for (int dx = 0; dx < w; ++dx) {
            coords.push_back({grid.wrap(origin.x + dx), grid.wrap(origin.y + dy)});
        }
    }
    return MarkedSet(grid, std::move(coords));
}

} // namespace lqw
