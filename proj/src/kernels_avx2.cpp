// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variants of the inner loops. These vectorize across output columns
// only, so every output element sees the exact scalar operation sequence
// (multiply, then add, k ascending) and results are bit-identical to the
// scalar backend. No FMA: a fused multiply-add rounds once where the scalar
// reference rounds twice.
#include "kernels_detail.hpp"

#if defined(GEMMSIM_HAVE_AVX2)

#include <immintrin.h>

#include <cstddef>

namespace gemmsim::kernels::avx2 {

void mac_tile_f32(const float* a, int lda, const float* b, int ldb, float* acc, int ldc,
                  int rows, int depth, int cols) {
    for (int r = 0; r < rows; ++r) {
        const float* arow = a + static_cast<std::size_t>(r) * lda;
        float* crow = acc + static_cast<std::size_t>(r) * ldc;
        for (int k = 0; k < depth; ++k) {
            const __m256 av = _mm256_set1_ps(arow[k]);
            const float* brow = b + static_cast<std::size_t>(k) * ldb;
            int c = 0;
            for (; c + 8 <= cols; c += 8) {
                __m256 cv = _mm256_loadu_ps(crow + c);
                __m256 bv = _mm256_loadu_ps(brow + c);
                cv = _mm256_add_ps(cv, _mm256_mul_ps(av, bv));
                _mm256_storeu_ps(crow + c, cv);
            }
            for (; c < cols; ++c) crow[c] += arow[k] * brow[c];
        }
    }
}

void mac_tile_i32(const std::int32_t* a, int lda, const std::int32_t* b, int ldb,
                  std::int32_t* acc, int ldc, int rows, int depth, int cols) {
    for (int r = 0; r < rows; ++r) {
        const std::int32_t* arow = a + static_cast<std::size_t>(r) * lda;
        std::int32_t* crow = acc + static_cast<std::size_t>(r) * ldc;
        for (int k = 0; k < depth; ++k) {
            const __m256i av = _mm256_set1_epi32(arow[k]);
            const std::int32_t* brow = b + static_cast<std::size_t>(k) * ldb;
            int c = 0;
            for (; c + 8 <= cols; c += 8) {
                __m256i cv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(crow + c));
                __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(brow + c));
                cv = _mm256_add_epi32(cv, _mm256_mullo_epi32(av, bv));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(crow + c), cv);
            }
            for (; c < cols; ++c) crow[c] += arow[k] * brow[c];
        }
    }
}

void interleaved_mac_tile_f32(const float* a, int lda, const float* b, int ldb,
                              float* partials, int q1, int step0, int rows, int depth,
                              int cols) {
    for (int r = 0; r < rows; ++r) {
        const float* arow = a + static_cast<std::size_t>(r) * lda;
        float* pbase = partials + static_cast<std::size_t>(r) * q1 * cols;
        for (int k = 0; k < depth; ++k) {
            const __m256 av = _mm256_set1_ps(arow[k]);
            const float* brow = b + static_cast<std::size_t>(k) * ldb;
            float* prow = pbase + static_cast<std::size_t>((step0 + k) % q1) * cols;
            int c = 0;
            for (; c + 8 <= cols; c += 8) {
                __m256 pv = _mm256_loadu_ps(prow + c);
                __m256 bv = _mm256_loadu_ps(brow + c);
                pv = _mm256_add_ps(pv, _mm256_mul_ps(av, bv));
                _mm256_storeu_ps(prow + c, pv);
            }
            for (; c < cols; ++c) prow[c] += arow[k] * brow[c];
        }
    }
}

void interleaved_mac_tile_i32(const std::int32_t* a, int lda, const std::int32_t* b,
                              int ldb, std::int32_t* partials, int q1, int step0,
                              int rows, int depth, int cols) {
    for (int r = 0; r < rows; ++r) {
        const std::int32_t* arow = a + static_cast<std::size_t>(r) * lda;
        std::int32_t* pbase = partials + static_cast<std::size_t>(r) * q1 * cols;
        for (int k = 0; k < depth; ++k) {
            const __m256i av = _mm256_set1_epi32(arow[k]);
            const std::int32_t* brow = b + static_cast<std::size_t>(k) * ldb;
            std::int32_t* prow = pbase + static_cast<std::size_t>((step0 + k) % q1) * cols;
            int c = 0;
            for (; c + 8 <= cols; c += 8) {
                __m256i pv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prow + c));
                __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(brow + c));
                pv = _mm256_add_epi32(pv, _mm256_mullo_epi32(av, bv));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(prow + c), pv);
            }
            for (; c < cols; ++c) prow[c] += arow[k] * brow[c];
        }
    }
}

void reduce_partials_f32(const float* partials, int q1, float* out, int ldo, int rows,
                         int cols) {
    for (int r = 0; r < rows; ++r) {
        const float* pbase = partials + static_cast<std::size_t>(r) * q1 * cols;
        float* orow = out + static_cast<std::size_t>(r) * ldo;
        int c = 0;
        for (; c + 8 <= cols; c += 8) {
            __m256 s = _mm256_loadu_ps(pbase + c);
            for (int j = 1; j < q1; ++j)
                s = _mm256_add_ps(
                    s, _mm256_loadu_ps(pbase + static_cast<std::size_t>(j) * cols + c));
            _mm256_storeu_ps(orow + c, s);
        }
        for (; c < cols; ++c) {
            float s = pbase[c];
            for (int j = 1; j < q1; ++j) s += pbase[static_cast<std::size_t>(j) * cols + c];
            orow[c] = s;
        }
    }
}

void reduce_partials_i32(const std::int32_t* partials, int q1, std::int32_t* out,
                         int ldo, int rows, int cols) {
    for (int r = 0; r < rows; ++r) {
        const std::int32_t* pbase = partials + static_cast<std::size_t>(r) * q1 * cols;
        std::int32_t* orow = out + static_cast<std::size_t>(r) * ldo;
        int c = 0;
        for (; c + 8 <= cols; c += 8) {
            __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pbase + c));
            for (int j = 1; j < q1; ++j)
                s = _mm256_add_epi32(
                    s, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(
                           pbase + static_cast<std::size_t>(j) * cols + c)));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(orow + c), s);
        }
        for (; c < cols; ++c) {
            std::int32_t s = pbase[c];
            for (int j = 1; j < q1; ++j) s += pbase[static_cast<std::size_t>(j) * cols + c];
            orow[c] = s;
        }
    }
}

} // namespace gemmsim::kernels::avx2

#endif // GEMMSIM_HAVE_AVX2
