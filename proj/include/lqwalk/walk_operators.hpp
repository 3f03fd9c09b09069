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
 * walk_operators.hpp - query, Grover coin, flip-flop shift and the search step
 *
 * One search step is U' = S (I x C) (Q x I): the query flips the sign of
 * every amplitude at a marked vertex, the coin reflects each vertex block
 * about |s_c>, and the shift swaps the facing amplitudes on every edge.
 * All three act in place. Each output amplitude is written by exactly one
 * loop iteration and the coin uses a fixed five-term summation order, so the
 * result is bitwise reproducible.
 *
 * dense_step_matrix() assembles the same step as an explicit 5N x 5N matrix
 * from the operator definitions. It is a verification oracle for small grids.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "grid_state.hpp"

namespace lqw {

/// Balanced coin state |s_c> for a given self-loop weight.
class CoinSpec {
  public:
    explicit CoinSpec(SelfLoopWeight l) : l_(l) {
        const double norm = std::sqrt(4.0 + l.value());
        const double arrow = 1.0 / norm;
        w_ = {arrow, arrow, arrow, arrow, std::sqrt(l.value()) / norm};
    }

    [[nodiscard]] SelfLoopWeight weight() const noexcept { return l_; }
    [[nodiscard]] const std::array<double, kCoinDim> &w() const noexcept { return w_; }

  private:
    SelfLoopWeight l_;
    std::array<double, kCoinDim> w_{};
};

/// Negate all five amplitudes of every marked vertex.
inline void apply_query(WalkState &state, const MarkedSet &marked) {
    if (state.grid() != marked.grid()) {
        throw ContractError("apply_query: grid mismatch");
    }
    const auto &grid = state.grid();
    auto amp = state.amplitudes();
    for (const auto &v : marked.coords()) {
        const std::size_t base = kCoinDim * grid.vertex_index(v);
        for (std::size_t c = 0; c < kCoinDim; ++c) {
            amp[base + c] = -amp[base + c];
        }
    }
}

/// v <- 2 w (w . v) - v on every vertex block.
inline void apply_coin(WalkState &state, const CoinSpec &coin) {
    const auto &w = coin.w();
    auto amp = state.amplitudes();
    for (std::size_t base = 0; base < amp.size(); base += kCoinDim) {
        double *v = amp.data() + base;
        const double dot = w[0] * v[0] + w[1] * v[1] + w[2] * v[2] + w[3] * v[3] + w[4] * v[4];
        const double twice = 2.0 * dot;
        v[0] = twice * w[0] - v[0];
        v[1] = twice * w[1] - v[1];
        v[2] = twice * w[2] - v[2];
        v[3] = twice * w[3] - v[3];
        v[4] = twice * w[4] - v[4];
    }
}

/// Flip-flop shift. (x,y,up) <-> (x,y+1,down) and (x,y,right) <-> (x+1,y,left);
/// loop amplitudes stay put. Every edge is visited once, so swapping in
/// place needs no scratch buffer.
inline void apply_shift(WalkState &state) {
    const auto side = static_cast<std::size_t>(state.grid().side());
    auto amp = state.amplitudes();
    constexpr std::size_t up = to_index(Coin::up);
    constexpr std::size_t down = to_index(Coin::down);
    constexpr std::size_t left = to_index(Coin::left);
    constexpr std::size_t right = to_index(Coin::right);
    for (std::size_t y = 0; y < side; ++y) {
        const std::size_t y_up = (y + 1 == side) ? 0 : y + 1;
        const std::size_t row = side * y;
        const std::size_t row_up = side * y_up;
        for (std::size_t x = 0; x < side; ++x) {
            const std::size_t x_right = (x + 1 == side) ? 0 : x + 1;
            const std::size_t here = kCoinDim * (x + row);
            std::swap(amp[here + up], amp[kCoinDim * (x + row_up) + down]);
            std::swap(amp[here + right], amp[kCoinDim * (x_right + row) + left]);
        }
    }
}

/// One search step: query, then coin, then shift.
inline void step(WalkState &state, const MarkedSet &marked, const CoinSpec &coin) {
    apply_query(state, marked);
    apply_coin(state, coin);
    apply_shift(state);
}

inline constexpr std::size_t kDenseDimLimit = 5000;

/// Explicit matrix of U' = S (I x C) (Q x I), assembled from the three
/// operator definitions independently of the in-place kernels above.
inline Eigen::MatrixXd dense_step_matrix(const GridSpec &grid, const MarkedSet &marked, const CoinSpec &coin) {
    if (grid != marked.grid()) {
        throw ContractError("dense_step_matrix: grid mismatch");
    }
    const auto dim = static_cast<Eigen::Index>(grid.n_amplitudes());
    if (grid.n_amplitudes() > kDenseDimLimit) {
        throw SizeLimitError("dense_step_matrix: dimension " + std::to_string(dim) + " exceeds " +
                             std::to_string(kDenseDimLimit));
    }
    const auto index = [&](Vertex v, Coin c) {
        return static_cast<Eigen::Index>(flat_index(grid, v.x, v.y, c));
    };

    Eigen::MatrixXd query = Eigen::MatrixXd::Identity(dim, dim);
    for (const auto &v : marked.coords()) {
        for (Coin c : kAllCoins) {
            query(index(v, c), index(v, c)) = -1.0;
        }
    }

    Eigen::Matrix<double, 5, 1> w;
    for (std::size_t c = 0; c < kCoinDim; ++c) {
        w(static_cast<Eigen::Index>(c)) = coin.w()[c];
    }
    const Eigen::Matrix<double, 5, 5> block = 2.0 * w * w.transpose() - Eigen::Matrix<double, 5, 5>::Identity();
    Eigen::MatrixXd coin_op = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t k = 0; k < grid.n_vertices(); ++k) {
        const auto off = static_cast<Eigen::Index>(kCoinDim * k);
        coin_op.block<5, 5>(off, off) = block;
    }

    // S|v, c> = |neighbour(v, c), opposite(c)>, and S|v, loop> = |v, loop>.
    Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t k = 0; k < grid.n_vertices(); ++k) {
        const Vertex v = grid.vertex_at(k);
        for (Coin c : kAllCoins) {
            shift(index(grid.neighbour(v, c), opposite(c)), index(v, c)) = 1.0;
        }
    }

    return shift * coin_op * query;
}

} // namespace lqw
