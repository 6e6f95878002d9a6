// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdint>

#include "gemmsim/tiling.hpp"
#include "helpers.hpp"

using namespace gemmsim;

TEST_CASE("pad_dim rounds up to the next tile multiple") {
    CHECK(pad_dim(16, 16) == 16);
    CHECK(pad_dim(10, 16) == 16);
    CHECK(pad_dim(65, 64) == 128);
    CHECK(pad_dim(1, 1) == 1);
    // smallest multiple of t that is >= n
    for (i64 n = 1; n <= 50; ++n) {
        for (i64 t = 1; t <= 20; ++t) {
            const i64 p = pad_dim(n, t);
            CHECK(p % t == 0);
            CHECK(p >= n);
            CHECK(p - t < n);
        }
    }
}

TEST_CASE("2x2 identity tiles to a single dense run") {
    const auto m = Matrix<std::int32_t>::identity(2);
    const auto t = tile_matrix(m, 2, 2, sizeof(std::int32_t));
    CHECK(t.grid_rows() == 1);
    CHECK(t.grid_cols() == 1);
    CHECK(t.data == std::vector<std::int32_t>{1, 0, 0, 1});
}

TEST_CASE("3x3 matrix in 2x2 tiles: enumerated layout") {
    const Matrix<std::int32_t> m(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});

    SUBCASE("dense layout (granule = element size)") {
        const auto t = tile_matrix(m, 2, 2, sizeof(std::int32_t));
        CHECK(t.data == std::vector<std::int32_t>{1, 2, 4, 5, 3, 0, 6, 0, 7, 8, 0, 0, 9,
                                                  0, 0, 0});
        CHECK(t.padded_rows() == 4);
        CHECK(t.padded_cols() == 4);
        // dense layout length equals the padded area
        CHECK(t.data.size() == 16);
    }

    SUBCASE("tile contents are layout-independent") {
        const auto t = tile_matrix(m, 2, 2); // default 64-byte granule
        const auto tile_vec = [&](int ti, int tj) {
            const std::int32_t* run = t.tile(ti, tj);
            return std::vector<std::int32_t>(run, run + 4);
        };
        CHECK(tile_vec(0, 0) == std::vector<std::int32_t>{1, 2, 4, 5});
        CHECK(tile_vec(0, 1) == std::vector<std::int32_t>{3, 0, 6, 0});
        CHECK(tile_vec(1, 0) == std::vector<std::int32_t>{7, 8, 0, 0});
        CHECK(tile_vec(1, 1) == std::vector<std::int32_t>{9, 0, 0, 0});
    }
}

TEST_CASE("tile start offsets are aligned to the granule") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const int rows = testutil::rand_dim(rng, 1, 40);
        const int cols = testutil::rand_dim(rng, 1, 40);
        const int tr = testutil::rand_dim(rng, 1, 16);
        const int tc = testutil::rand_dim(rng, 1, 16);
        const auto m = testutil::random_int_matrix<std::int32_t>(rng, rows, cols);
        const auto t = tile_matrix(m, tr, tc); // default granule
        for (int ti = 0; ti < t.grid_rows(); ++ti)
            for (int tj = 0; tj < t.grid_cols(); ++tj)
                CHECK(t.tile_offset(ti, tj) * sizeof(std::int32_t) %
                          kDefaultAlignGranule ==
                      0);
    }
}

TEST_CASE("untile inverts tile for random shapes and granules") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        const int rows = testutil::rand_dim(rng, 1, 40);
        const int cols = testutil::rand_dim(rng, 1, 40);
        const int tr = testutil::rand_dim(rng, 1, 16);
        const int tc = testutil::rand_dim(rng, 1, 16);
        const int granule = (iter % 2 == 0) ? kDefaultAlignGranule : 4;

        const auto mi = testutil::random_int_matrix<std::int32_t>(rng, rows, cols);
        CHECK(untile_matrix(tile_matrix(mi, tr, tc, granule)) == mi);

        const auto mf = testutil::random_float_matrix(rng, rows, cols);
        CHECK(untile_matrix(tile_matrix(mf, tr, tc, granule)) == mf);
    }
}

TEST_CASE("pad elements are exactly zero") {
    std::mt19937 rng(23);
    const auto m = testutil::random_int_matrix<std::int32_t>(rng, 5, 7, 1, 9);
    const auto t = tile_matrix(m, 4, 4);
    for (int i = 0; i < t.padded_rows(); ++i)
        for (int j = 0; j < t.padded_cols(); ++j) {
            if (i < m.rows && j < m.cols)
                CHECK(t.at(i, j) == m(i, j));
            else
                CHECK(t.at(i, j) == 0);
        }
}

TEST_CASE("single 1x1 tile round-trips") {
    Matrix<std::int32_t> m(1, 1, {42});
    const auto t = tile_matrix(m, 1, 1);
    CHECK(untile_matrix(t) == m);
}

TEST_CASE("malformed tiled buffer is rejected") {
    const Matrix<std::int32_t> m(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    auto t = tile_matrix(m, 2, 2);
    t.data.pop_back();
    CHECK_THROWS_AS(untile_matrix(t), StructuralError);
}

TEST_CASE("granule must be a multiple of the element size") {
    const Matrix<std::int32_t> m(2, 2, {1, 2, 3, 4});
    CHECK_THROWS_AS(tile_matrix(m, 2, 2, 6), StructuralError);
    CHECK_THROWS_AS(tile_matrix(m, 2, 2, 0), StructuralError);
}
