// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gemmsim/kernels.hpp"
#include "gemmsim/matrix.hpp"
#include "gemmsim/tiling.hpp"
#include "gemmsim/types.hpp"

namespace gemmsim {

/// Plain triple-loop dense product. Ground-truth oracle for every other
/// executor; keep it boring.
template <typename T>
Matrix<T> gemm_reference(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols != b.rows)
        throw ShapeError("gemm: a.cols (" + std::to_string(a.cols) + ") != b.rows (" +
                         std::to_string(b.rows) + ")");
    Matrix<T> c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) {
            T s{};
            for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

namespace detail {
template <typename T>
inline void mac_tile_any(const T* a, int lda, const T* b, int ldb, T* acc, int ldc,
                         int rows, int depth, int cols) {
    if constexpr (kernels::has_dispatch<T>)
        kernels::mac_tile(a, lda, b, ldb, acc, ldc, rows, depth, cols);
    else
        kernels::generic::mac_tile(a, lda, b, ldb, acc, ldc, rows, depth, cols);
}
} // namespace detail

/// Blocked GEMM with the accelerator's tiling discipline: operands are
/// zero-padded to whole tiles, each output tile is accumulated locally over
/// all ceil(P/tp) tile pairs before write-back, and the result is untiled
/// back to R x C. Accumulation stays in T, no widening.
template <typename T>
Matrix<T> blocked_gemm(const Matrix<T>& a, const Matrix<T>& b, const TileConfig& cfg) {
    if (a.cols != b.rows)
        throw ShapeError("blocked_gemm: a.cols (" + std::to_string(a.cols) +
                         ") != b.rows (" + std::to_string(b.rows) + ")");
    validate(cfg);
    const int tr = static_cast<int>(cfg.tr);
    const int tc = static_cast<int>(cfg.tc);
    const int tp = static_cast<int>(cfg.tp);

    const TiledMatrix<T> ta = tile_matrix(a, tr, tp);
    const TiledMatrix<T> tb = tile_matrix(b, tp, tc);
    TiledMatrix<T> out = make_tiled<T>(a.rows, b.cols, tr, tc);

    const int kt_tiles = ta.grid_cols();
    for (int it = 0; it < out.grid_rows(); ++it) {
        for (int jt = 0; jt < out.grid_cols(); ++jt) {
            T* ctile = out.tile(it, jt);
            for (int kt = 0; kt < kt_tiles; ++kt)
                detail::mac_tile_any(ta.tile(it, kt), tp, tb.tile(kt, jt), tc, ctile, tc,
                                     tr, tp, tc);
        }
    }
    return untile_matrix(out);
}

} // namespace gemmsim
