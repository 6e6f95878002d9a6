// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "gemmsim/kernels.hpp"
#include "gemmsim/matrix.hpp"
#include "gemmsim/tiling.hpp"
#include "gemmsim/types.hpp"

namespace gemmsim {

/// Functional + cycle-level result of one GEMM on the PE mesh.
template <typename T>
struct SimResult {
    Matrix<T> output;
    i64 cycles = 0;          // total compute cycles
    i64 tiles_processed = 0; // output tiles, ceil(R/tr)*ceil(C/tc)
};

/// One PE holds q+1 independent partial accumulators so a q-cycle multiplier
/// still retires one MAC per cycle; the partials are summed when the output
/// tile completes.
template <typename T>
struct PeState {
    std::vector<T> cache; // q+1 partials
    T result{};

    explicit PeState(int q) : cache(static_cast<std::size_t>(q) + 1, T{}) {}

    void absorb(T product, i64 step) { cache[step % cache.size()] += product; }

    T finish() {
        result = T{};
        for (const T& p : cache) result += p;
        return result;
    }
};

/// Round-robin the products into q+1 partial sums, then reduce the partials
/// in index order. For integers this equals the plain sum exactly.
template <typename T>
T interleaved_accumulate(std::span<const T> products, int q) {
    const int q1 = q + 1;
    std::vector<T> partials(static_cast<std::size_t>(q1), T{});
    for (std::size_t i = 0; i < products.size(); ++i)
        partials[i % static_cast<std::size_t>(q1)] += products[i];
    T s = partials[0];
    for (int j = 1; j < q1; ++j) s += partials[static_cast<std::size_t>(j)];
    return s;
}

/// Streaming cycles of one tile-pair pass through the mesh: tp beats of
/// input plus the tc+tr-2 fill/drain skew, independent of the data.
inline i64 tile_pass_cycles(const TileConfig& cfg) { return cfg.tp + cfg.tc + cfg.tr - 2; }

/// Final reduction of the interleaved partials per output tile.
inline i64 tile_reduce_cycles(int q) { return static_cast<i64>(q + 1) * (q + 1); }

namespace detail {
template <typename T>
inline void interleaved_mac_any(const T* a, int lda, const T* b, int ldb, T* partials,
                                int q1, int step0, int rows, int depth, int cols) {
    if constexpr (kernels::has_dispatch<T>)
        kernels::interleaved_mac_tile(a, lda, b, ldb, partials, q1, step0, rows, depth,
                                      cols);
    else
        kernels::generic::interleaved_mac_tile(a, lda, b, ldb, partials, q1, step0, rows,
                                               depth, cols);
}

template <typename T>
inline void reduce_any(const T* partials, int q1, T* out, int ldo, int rows, int cols) {
    if constexpr (kernels::has_dispatch<T>)
        kernels::reduce_partials(partials, q1, out, ldo, rows, cols);
    else
        kernels::generic::reduce_partials(partials, q1, out, ldo, rows, cols);
}
} // namespace detail

/// Run C = A·B through the tr x tc mesh tile by tile. Cycle accounting is
/// accumulated per pass and per tile, not taken from the closed form, so it
/// can be cross-checked against the analytical cycle count.
template <typename T>
SimResult<T> simulate_gemm(const Matrix<T>& a, const Matrix<T>& b, const TileConfig& cfg,
                           int q) {
    if (a.cols != b.rows)
        throw ShapeError("simulate_gemm: a.cols (" + std::to_string(a.cols) +
                         ") != b.rows (" + std::to_string(b.rows) + ")");
    if (q < 0) throw ShapeError("simulate_gemm: q must be >= 0");
    validate(cfg);
    const int tr = static_cast<int>(cfg.tr);
    const int tc = static_cast<int>(cfg.tc);
    const int tp = static_cast<int>(cfg.tp);
    const int q1 = q + 1;

    const TiledMatrix<T> ta = tile_matrix(a, tr, tp);
    const TiledMatrix<T> tb = tile_matrix(b, tp, tc);
    TiledMatrix<T> out = make_tiled<T>(a.rows, b.cols, tr, tc);

    // q+1 partials per PE, [tr][q1][tc], reused across output tiles.
    std::vector<T> partials(static_cast<std::size_t>(tr) * q1 * tc);

    SimResult<T> res;
    const int kt_tiles = ta.grid_cols();
    for (int it = 0; it < out.grid_rows(); ++it) {
        for (int jt = 0; jt < out.grid_cols(); ++jt) {
            std::fill(partials.begin(), partials.end(), T{});
            for (int kt = 0; kt < kt_tiles; ++kt) {
                detail::interleaved_mac_any(ta.tile(it, kt), tp, tb.tile(kt, jt), tc,
                                            partials.data(), q1, kt * tp, tr, tp, tc);
                res.cycles += tile_pass_cycles(cfg);
            }
            detail::reduce_any(partials.data(), q1, out.tile(it, jt), tc, tr, tc);
            res.cycles += tile_reduce_cycles(q);
            res.tiles_processed += 1;
        }
    }
    res.output = untile_matrix(out);
    return res;
}

} // namespace gemmsim
