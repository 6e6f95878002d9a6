// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <type_traits>

namespace gemmsim::kernels {

// Runtime-selected implementation of the arithmetic inner loops. All
// backends are required to be bit-identical: the SIMD variants vectorize
// across independent output elements and keep the per-element operation
// sequence (multiply, then add, k ascending) of the scalar reference.
enum class Backend {
    scalar,
    avx2,
};

const char* backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();

/// Select a backend explicitly; throws if it is not available on this host.
void set_backend(Backend b);

/// Re-run detection and pick the best available backend.
void reset_backend();

// acc[r, c] += sum_k a[r, k] * b[k, c]   (k ascending per element)
void mac_tile(const float* a, int lda, const float* b, int ldb, float* acc, int ldc,
              int rows, int depth, int cols);
void mac_tile(const std::int32_t* a, int lda, const std::int32_t* b, int ldb,
              std::int32_t* acc, int ldc, int rows, int depth, int cols);

// Interleaved PE update: product (r, k) lands in partial (step0 + k) mod q1.
// partials is laid out [rows][q1][cols], cols contiguous.
void interleaved_mac_tile(const float* a, int lda, const float* b, int ldb,
                          float* partials, int q1, int step0, int rows, int depth,
                          int cols);
void interleaved_mac_tile(const std::int32_t* a, int lda, const std::int32_t* b, int ldb,
                          std::int32_t* partials, int q1, int step0, int rows, int depth,
                          int cols);

// out[r, c] = sum_j partials[r][j][c], j ascending.
void reduce_partials(const float* partials, int q1, float* out, int ldo, int rows,
                     int cols);
void reduce_partials(const std::int32_t* partials, int q1, std::int32_t* out, int ldo,
                     int rows, int cols);

namespace generic {

// Scalar fallbacks for element types without a dispatched implementation.

template <typename T>
void mac_tile(const T* a, int lda, const T* b, int ldb, T* acc, int ldc, int rows,
              int depth, int cols) {
    for (int r = 0; r < rows; ++r) {
        const T* arow = a + static_cast<std::size_t>(r) * lda;
        T* crow = acc + static_cast<std::size_t>(r) * ldc;
        for (int k = 0; k < depth; ++k) {
            const T av = arow[k];
            const T* brow = b + static_cast<std::size_t>(k) * ldb;
            for (int c = 0; c < cols; ++c) crow[c] += av * brow[c];
        }
    }
}

template <typename T>
void interleaved_mac_tile(const T* a, int lda, const T* b, int ldb, T* partials, int q1,
                          int step0, int rows, int depth, int cols) {
    for (int r = 0; r < rows; ++r) {
        const T* arow = a + static_cast<std::size_t>(r) * lda;
        T* pbase = partials + static_cast<std::size_t>(r) * q1 * cols;
        for (int k = 0; k < depth; ++k) {
            const T av = arow[k];
            const T* brow = b + static_cast<std::size_t>(k) * ldb;
            T* prow = pbase + static_cast<std::size_t>((step0 + k) % q1) * cols;
            for (int c = 0; c < cols; ++c) prow[c] += av * brow[c];
        }
    }
}

template <typename T>
void reduce_partials(const T* partials, int q1, T* out, int ldo, int rows, int cols) {
    for (int r = 0; r < rows; ++r) {
        const T* pbase = partials + static_cast<std::size_t>(r) * q1 * cols;
        T* orow = out + static_cast<std::size_t>(r) * ldo;
        for (int c = 0; c < cols; ++c) {
            T s = pbase[c];
            for (int j = 1; j < q1; ++j) s += pbase[static_cast<std::size_t>(j) * cols + c];
            orow[c] = s;
        }
    }
}

} // namespace generic

template <typename T>
inline constexpr bool has_dispatch =
    std::is_same_v<T, float> || std::is_same_v<T, std::int32_t>;

} // namespace gemmsim::kernels
