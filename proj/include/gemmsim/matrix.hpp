// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gemmsim/errors.hpp"

namespace gemmsim {

/// Dense row-major matrix. T is a numeric scalar; float and int32_t are the
/// instantiations the kernels accelerate, anything else runs scalar.
template <typename T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T{}) {
        if (r < 0 || c < 0) throw ShapeError("matrix dims must be non-negative");
    }
    Matrix(int r, int c, std::initializer_list<T> init) : Matrix(r, c) {
        if (init.size() != data.size()) throw ShapeError("initializer size mismatch");
        std::copy(init.begin(), init.end(), data.begin());
    }

    T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }

    T* row(int i) { return data.data() + static_cast<std::size_t>(i) * cols; }
    const T* row(int i) const { return data.data() + static_cast<std::size_t>(i) * cols; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

} // namespace gemmsim
