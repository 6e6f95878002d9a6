// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/kernels.hpp"

#include "gemmsim/errors.hpp"
#include "kernels_detail.hpp"

namespace gemmsim::kernels {

namespace {

struct Impl {
    void (*mac_f32)(const float*, int, const float*, int, float*, int, int, int, int);
    void (*mac_i32)(const std::int32_t*, int, const std::int32_t*, int, std::int32_t*,
                    int, int, int, int);
    void (*imac_f32)(const float*, int, const float*, int, float*, int, int, int, int,
                     int);
    void (*imac_i32)(const std::int32_t*, int, const std::int32_t*, int, std::int32_t*,
                     int, int, int, int, int);
    void (*red_f32)(const float*, int, float*, int, int, int);
    void (*red_i32)(const std::int32_t*, int, std::int32_t*, int, int, int);
};

constexpr Impl kScalarImpl = {
    &generic::mac_tile<float>,
    &generic::mac_tile<std::int32_t>,
    &generic::interleaved_mac_tile<float>,
    &generic::interleaved_mac_tile<std::int32_t>,
    &generic::reduce_partials<float>,
    &generic::reduce_partials<std::int32_t>,
};

#if defined(GEMMSIM_HAVE_AVX2)
constexpr Impl kAvx2Impl = {
    &avx2::mac_tile_f32,    &avx2::mac_tile_i32,      &avx2::interleaved_mac_tile_f32,
    &avx2::interleaved_mac_tile_i32, &avx2::reduce_partials_f32, &avx2::reduce_partials_i32,
};
#endif

bool host_has_avx2() {
#if defined(GEMMSIM_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect() { return host_has_avx2() ? Backend::avx2 : Backend::scalar; }

Backend& state() {
    static Backend b = detect();
    return b;
}

const Impl& impl_for(Backend b) {
#if defined(GEMMSIM_HAVE_AVX2)
    if (b == Backend::avx2) return kAvx2Impl;
#endif
    (void)b;
    return kScalarImpl;
}

const Impl& impl() { return impl_for(state()); }

} // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return host_has_avx2();
    }
    return false;
}

Backend active_backend() { return state(); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw InputError(std::string("kernel backend not available on this host: ") +
                         backend_name(b));
    state() = b;
}

void reset_backend() { state() = detect(); }

void mac_tile(const float* a, int lda, const float* b, int ldb, float* acc, int ldc,
              int rows, int depth, int cols) {
    impl().mac_f32(a, lda, b, ldb, acc, ldc, rows, depth, cols);
}

void mac_tile(const std::int32_t* a, int lda, const std::int32_t* b, int ldb,
              std::int32_t* acc, int ldc, int rows, int depth, int cols) {
    impl().mac_i32(a, lda, b, ldb, acc, ldc, rows, depth, cols);
}

void interleaved_mac_tile(const float* a, int lda, const float* b, int ldb,
                          float* partials, int q1, int step0, int rows, int depth,
                          int cols) {
    impl().imac_f32(a, lda, b, ldb, partials, q1, step0, rows, depth, cols);
}

void interleaved_mac_tile(const std::int32_t* a, int lda, const std::int32_t* b, int ldb,
                          std::int32_t* partials, int q1, int step0, int rows, int depth,
                          int cols) {
    impl().imac_i32(a, lda, b, ldb, partials, q1, step0, rows, depth, cols);
}

void reduce_partials(const float* partials, int q1, float* out, int ldo, int rows,
                     int cols) {
    impl().red_f32(partials, q1, out, ldo, rows, cols);
}

void reduce_partials(const std::int32_t* partials, int q1, std::int32_t* out, int ldo,
                     int rows, int cols) {
    impl().red_i32(partials, q1, out, ldo, rows, cols);
}

} // namespace gemmsim::kernels
