// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

// Internal: AVX2 kernel entry points, defined in kernels_avx2.cpp when the
// toolchain can target AVX2. Callers must verify runtime support first.
namespace gemmsim::kernels::avx2 {

#if defined(GEMMSIM_HAVE_AVX2)

void mac_tile_f32(const float* a, int lda, const float* b, int ldb, float* acc, int ldc,
                  int rows, int depth, int cols);
void mac_tile_i32(const std::int32_t* a, int lda, const std::int32_t* b, int ldb,
                  std::int32_t* acc, int ldc, int rows, int depth, int cols);

void interleaved_mac_tile_f32(const float* a, int lda, const float* b, int ldb,
                              float* partials, int q1, int step0, int rows, int depth,
                              int cols);
void interleaved_mac_tile_i32(const std::int32_t* a, int lda, const std::int32_t* b,
                              int ldb, std::int32_t* partials, int q1, int step0,
                              int rows, int depth, int cols);

void reduce_partials_f32(const float* partials, int q1, float* out, int ldo, int rows,
                         int cols);
void reduce_partials_i32(const std::int32_t* partials, int q1, std::int32_t* out,
                         int ldo, int rows, int cols);

#endif // GEMMSIM_HAVE_AVX2

} // namespace gemmsim::kernels::avx2
