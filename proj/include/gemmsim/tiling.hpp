// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "gemmsim/matrix.hpp"
#include "gemmsim/types.hpp"

namespace gemmsim {

// Off-chip images are stored as aligned per-tile vectors, so every tile run
// begins on an alignment granule boundary. 64 bytes by default; a granule of
// sizeof(T) gives the dense layout (tile runs back to back).
constexpr int kDefaultAlignGranule = 64;

/// Tiled image of a matrix: zero-padded to whole tiles, each tile stored
/// row-major in a contiguous run, runs ordered row-major over the tile grid.
template <typename T>
struct TiledMatrix {
    int orig_rows = 0;
    int orig_cols = 0;
    int tile_rows = 1;
    int tile_cols = 1;
    int granule_bytes = kDefaultAlignGranule;
    std::vector<T> data;

    int padded_rows() const { return static_cast<int>(pad_dim(orig_rows, tile_rows)); }
    int padded_cols() const { return static_cast<int>(pad_dim(orig_cols, tile_cols)); }
    int grid_rows() const { return static_cast<int>(ceil_div(orig_rows, tile_rows)); }
    int grid_cols() const { return static_cast<int>(ceil_div(orig_cols, tile_cols)); }

    /// Elements from one tile start to the next; >= tile_rows*tile_cols.
    std::size_t tile_stride() const {
        const std::size_t tile_bytes =
            static_cast<std::size_t>(tile_rows) * tile_cols * sizeof(T);
        const std::size_t g = static_cast<std::size_t>(granule_bytes);
        return (tile_bytes + g - 1) / g * g / sizeof(T);
    }

    std::size_t tile_offset(int ti, int tj) const {
        return (static_cast<std::size_t>(ti) * grid_cols() + tj) * tile_stride();
    }

    T* tile(int ti, int tj) { return data.data() + tile_offset(ti, tj); }
    const T* tile(int ti, int tj) const { return data.data() + tile_offset(ti, tj); }

    /// Element at logical position (i, j) of the padded matrix.
    const T& at(int i, int j) const {
        return tile(i / tile_rows, j / tile_cols)[(i % tile_rows) * tile_cols +
                                                  (j % tile_cols)];
    }
};

namespace detail {
template <typename T>
inline void check_granule(int granule_bytes) {
    if (granule_bytes < 1 || granule_bytes % sizeof(T) != 0)
        throw StructuralError("alignment granule must be a positive multiple of the "
                              "element size");
}
} // namespace detail

/// Zero-filled tiled image with the given logical dims; pads are zero.
template <typename T>
TiledMatrix<T> make_tiled(int rows, int cols, int tile_rows, int tile_cols,
                          int granule_bytes = kDefaultAlignGranule) {
    if (rows < 1 || cols < 1 || tile_rows < 1 || tile_cols < 1)
        throw ShapeError("tiled matrix dims must be >= 1");
    detail::check_granule<T>(granule_bytes);
    TiledMatrix<T> t;
    t.orig_rows = rows;
    t.orig_cols = cols;
    t.tile_rows = tile_rows;
    t.tile_cols = tile_cols;
    t.granule_bytes = granule_bytes;
    t.data.assign(static_cast<std::size_t>(t.grid_rows()) * t.grid_cols() *
                      t.tile_stride(),
                  T{});
    return t;
}

template <typename T>
TiledMatrix<T> tile_matrix(const Matrix<T>& m, int tile_rows, int tile_cols,
                           int granule_bytes = kDefaultAlignGranule) {
    TiledMatrix<T> t = make_tiled<T>(m.rows, m.cols, tile_rows, tile_cols, granule_bytes);
    for (int ti = 0; ti < t.grid_rows(); ++ti) {
        for (int tj = 0; tj < t.grid_cols(); ++tj) {
            T* run = t.tile(ti, tj);
            const int i0 = ti * tile_rows;
            const int j0 = tj * tile_cols;
            const int h = std::min(tile_rows, m.rows - i0);
            const int w = std::min(tile_cols, m.cols - j0);
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < w; ++j) run[i * tile_cols + j] = m(i0 + i, j0 + j);
        }
    }
    return t;
}

/// Inverse transform; pads are discarded.
template <typename T>
Matrix<T> untile_matrix(const TiledMatrix<T>& t) {
    detail::check_granule<T>(t.granule_bytes);
    const std::size_t expect =
        static_cast<std::size_t>(t.grid_rows()) * t.grid_cols() * t.tile_stride();
    if (t.data.size() != expect)
        throw StructuralError("tiled buffer length mismatch: have " +
                              std::to_string(t.data.size()) + ", expected " +
                              std::to_string(expect));
    Matrix<T> m(t.orig_rows, t.orig_cols);
    for (int ti = 0; ti < t.grid_rows(); ++ti) {
        for (int tj = 0; tj < t.grid_cols(); ++tj) {
            const T* run = t.tile(ti, tj);
            const int i0 = ti * t.tile_rows;
            const int j0 = tj * t.tile_cols;
            const int h = std::min(t.tile_rows, t.orig_rows - i0);
            const int w = std::min(t.tile_cols, t.orig_cols - j0);
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < w; ++j) m(i0 + i, j0 + j) = run[i * t.tile_cols + j];
        }
    }
    return m;
}

} // namespace gemmsim
