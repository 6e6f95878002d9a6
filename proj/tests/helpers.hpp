// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "gemmsim/matrix.hpp"

namespace testutil {

template <typename T>
gemmsim::Matrix<T> random_int_matrix(std::mt19937& rng, int rows, int cols, int lo = -8,
                                     int hi = 8) {
    gemmsim::Matrix<T> m(rows, cols);
    const unsigned span = static_cast<unsigned>(hi - lo + 1);
    for (auto& v : m.data) v = static_cast<T>(static_cast<int>(rng() % span) + lo);
    return m;
}

inline gemmsim::Matrix<float> random_float_matrix(std::mt19937& rng, int rows, int cols) {
    gemmsim::Matrix<float> m(rows, cols);
    std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
    for (auto& v : m.data) v = dist(rng);
    return m;
}

// |a-b| relative to max(1, |a|, |b|): absolute near zero, relative otherwise.
inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

template <typename T>
double max_rel_err(const gemmsim::Matrix<T>& x, const gemmsim::Matrix<T>& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.data.size(); ++i) {
        const double a = static_cast<double>(x.data[i]);
        const double b = static_cast<double>(y.data[i]);
        worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
    }
    return worst;
}

inline int rand_dim(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

} // namespace testutil
