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
 * grid_state.hpp - geometry and amplitude storage for the lackadaisical walk
 *
 * The walk lives on a side x side torus. Every vertex carries a five
 * dimensional coin register {up, down, left, right, loop}; the loop entry is
 * the self-loop. All operators and the initial state are real, so the state
 * is a flat std::vector<double> of length 5N laid out coin-fastest:
 *
 *     index(x, y, c) = c + 5 * (x + side * y)
 *
 * which keeps the five coin amplitudes of one vertex contiguous.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lqw {

inline constexpr std::size_t kCoinDim = 5;

/// Coin register labels. The numeric value is the offset inside a vertex block.
enum class Coin : std::uint8_t { up = 0, down = 1, left = 2, right = 3, loop = 4 };

inline constexpr std::array<Coin, kCoinDim> kAllCoins{Coin::up, Coin::down, Coin::left,
                                                      Coin::right, Coin::loop};

constexpr std::size_t to_index(Coin c) noexcept { return static_cast<std::size_t>(c); }

constexpr const char *to_string(Coin c) noexcept {
    switch (c) {
    case Coin::up:
        return "up";
    case Coin::down:
        return "down";
    case Coin::left:
        return "left";
    case Coin::right:
        return "right";
    case Coin::loop:
        return "loop";
    }
    return "?";
}

/// Direction that an arrow arrives as after the flip-flop shift.
constexpr Coin opposite(Coin c) noexcept {
    switch (c) {
    case Coin::up:
        return Coin::down;
    case Coin::down:
        return Coin::up;
    case Coin::left:
        return Coin::right;
    case Coin::right:
        return Coin::left;
    case Coin::loop:
        return Coin::loop;
    }
    return c;
}

struct Vertex {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Vertex &, const Vertex &) = default;
};

/// Square torus of side x side vertices.
class GridSpec {
  public:
    explicit GridSpec(int side) : side_(side) {
        if (side < 2) {
            throw ContractError("GridSpec: side must be >= 2, got " + std::to_string(side));
        }
    }

    [[nodiscard]] int side() const noexcept { return side_; }
    [[nodiscard]] std::size_t n_vertices() const noexcept {
        return static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_);
    }
    [[nodiscard]] std::size_t n_amplitudes() const noexcept { return kCoinDim * n_vertices(); }

    [[nodiscard]] bool contains(Vertex v) const noexcept {
        return v.x >= 0 && v.y >= 0 && v.x < side_ && v.y < side_;
    }

    /// Non-negative modulus, so wrap(-1) == side - 1.
    [[nodiscard]] int wrap(int k) const noexcept {
        const int r = k % side_;
        return r < 0 ? r + side_ : r;
    }

    [[nodiscard]] std::size_t vertex_index(Vertex v) const noexcept {
        return static_cast<std::size_t>(v.x) +
               static_cast<std::size_t>(side_) * static_cast<std::size_t>(v.y);
    }

    [[nodiscard]] Vertex vertex_at(std::size_t vertex_index) const noexcept {
        const auto s = static_cast<std::size_t>(side_);
        return {static_cast<int>(vertex_index % s), static_cast<int>(vertex_index / s)};
    }

    /// Neighbour reached by following arrow `c` (loop returns the vertex itself).
    [[nodiscard]] Vertex neighbour(Vertex v, Coin c) const noexcept {
        switch (c) {
        case Coin::up:
            return {v.x, wrap(v.y + 1)};
        case Coin::down:
            return {v.x, wrap(v.y - 1)};
        case Coin::left:
            return {wrap(v.x - 1), v.y};
        case Coin::right:
            return {wrap(v.x + 1), v.y};
        case Coin::loop:
            break;
        }
        return v;
    }

    friend bool operator==(const GridSpec &, const GridSpec &) = default;

  private:
    int side_;
};

/// Flat amplitude index; throws ContractError on out-of-range coordinates.
inline std::size_t flat_index(const GridSpec &grid, int x, int y, Coin c) {
    if (!grid.contains({x, y})) {
        throw ContractError("flat_index: vertex (" + std::to_string(x) + "," + std::to_string(y) +
                            ") outside side " + std::to_string(grid.side()));
    }
    return to_index(c) + kCoinDim * grid.vertex_index({x, y});
}

/// Non-negative self-loop weight. Zero gives the loopless walk.
class SelfLoopWeight {
  public:
    constexpr SelfLoopWeight() = default;
    explicit SelfLoopWeight(double l) : l_(l) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw ContractError("SelfLoopWeight: l must be finite and >= 0");
        }
    }
    [[nodiscard]] constexpr double value() const noexcept { return l_; }

  private:
    double l_ = 0.0;
};

/// Validated set of marked vertices, stored sorted by (x, y).
class MarkedSet {
  public:
    MarkedSet(const GridSpec &grid, std::vector<Vertex> coords) : grid_(grid), coords_(std::move(coords)) {
        for (const auto &v : coords_) {
            if (!grid_.contains(v)) {
                throw ConfigError("marked vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                                  ") outside grid of side " + std::to_string(grid_.side()));
            }
        }
        std::sort(coords_.begin(), coords_.end());
        if (std::adjacent_find(coords_.begin(), coords_.end()) != coords_.end()) {
            throw ConfigError("marked set contains duplicate vertices");
        }
    }
    MarkedSet(const GridSpec &grid, std::initializer_list<Vertex> coords)
        : MarkedSet(grid, std::vector<Vertex>(coords)) {}

    [[nodiscard]] const GridSpec &grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const Vertex> coords() const noexcept { return coords_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] bool empty() const noexcept { return coords_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const {
        return std::binary_search(coords_.begin(), coords_.end(), v);
    }

    friend bool operator==(const MarkedSet &, const MarkedSet &) = default;

  private:
    GridSpec grid_;
    std::vector<Vertex> coords_;
};

/// Real amplitude vector over (vertex x coin).
class WalkState {
  public:
    static constexpr double kNormTolerance = 1e-10;

    /// Checked constructor: the vector must have length 5N and unit norm.
    WalkState(const GridSpec &grid, std::vector<double> amplitudes) : grid_(grid), amp_(std::move(amplitudes)) {
        check_size();
        const double n2 = squared_norm();
        if (std::abs(n2 - 1.0) > kNormTolerance) {
            throw ContractError("WalkState: squared norm " + std::to_string(n2) + " is not 1");
        }
    }

    /// UNCHECKED: builds a state with arbitrary norm (stationary building
    /// blocks, leftovers, scratch vectors). Only the length is validated.
    static WalkState unchecked(const GridSpec &grid, std::vector<double> amplitudes) {
        return WalkState(grid, std::move(amplitudes), Unchecked{});
    }

    static WalkState zeros(const GridSpec &grid) {
        return unchecked(grid, std::vector<double>(grid.n_amplitudes(), 0.0));
    }

    static WalkState basis(const GridSpec &grid, Vertex v, Coin c) {
        auto s = zeros(grid);
        s[flat_index(grid, v.x, v.y, c)] = 1.0;
        return s;
    }

    [[nodiscard]] const GridSpec &grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> amplitudes() const noexcept { return amp_; }
    [[nodiscard]] std::span<double> amplitudes() noexcept { return amp_; }
    [[nodiscard]] std::size_t size() const noexcept { return amp_.size(); }

    double &operator[](std::size_t i) noexcept { return amp_[i]; }
    double operator[](std::size_t i) const noexcept { return amp_[i]; }

    [[nodiscard]] double at(Vertex v, Coin c) const { return amp_[flat_index(grid_, v.x, v.y, c)]; }
    double &at(Vertex v, Coin c) { return amp_[flat_index(grid_, v.x, v.y, c)]; }

    /// The five coin amplitudes of one vertex.
    [[nodiscard]] std::span<const double, kCoinDim> coin_block(Vertex v) const {
        return std::span<const double, kCoinDim>(amp_.data() + flat_index(grid_, v.x, v.y, Coin::up), kCoinDim);
    }

    [[nodiscard]] double squared_norm() const noexcept {
        double acc = 0.0;
        for (double a : amp_) {
            acc += a * a;
        }
        return acc;
    }

    friend bool operator==(const WalkState &, const WalkState &) = default;

  private:
    struct Unchecked {};
    WalkState(const GridSpec &grid, std::vector<double> amplitudes, Unchecked)
        : grid_(grid), amp_(std::move(amplitudes)) {
        check_size();
    }

    void check_size() const {
        if (amp_.size() != grid_.n_amplitudes()) {
            throw ContractError("WalkState: expected " + std::to_string(grid_.n_amplitudes()) +
                                " amplitudes, got " + std::to_string(amp_.size()));
        }
    }

    GridSpec grid_;
    std::vector<double> amp_;
};

/// Uniform superposition over vertices; coin part is |s_c> with the loop
/// entry weighted by sqrt(l).
inline WalkState initial_state(const GridSpec &grid, SelfLoopWeight l) {
    const double lv = l.value();
    const double arrow = 1.0 / std::sqrt(static_cast<double>(grid.n_vertices()) * (4.0 + lv));
    const double loop = std::sqrt(lv) * arrow;
    std::vector<double> amp(grid.n_amplitudes());
    for (std::size_t base = 0; base < amp.size(); base += kCoinDim) {
        amp[base + 0] = arrow;
        amp[base + 1] = arrow;
        amp[base + 2] = arrow;
        amp[base + 3] = arrow;
        amp[base + 4] = loop;
    }
    return WalkState(grid, std::move(amp));
}

/// Real inner product <a|b>.
inline double overlap(const WalkState &a, const WalkState &b) {
    if (a.grid() != b.grid()) {
        throw ContractError("overlap: grid mismatch");
    }
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i] * y[i];
    }
    return acc;
}

/// Probability that measuring the position register yields a marked vertex.
inline double marked_probability(const WalkState &state, const MarkedSet &marked) {
    if (state.grid() != marked.grid()) {
        throw ContractError("marked_probability: grid mismatch");
    }
    double acc = 0.0;
    for (const auto &v : marked.coords()) {
        for (double a : state.coin_block(v)) {
            acc += a * a;
        }
    }
    return acc;
}

} // namespace lqw
