// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "gemmsim/errors.hpp"

namespace gemmsim {

using i64 = std::int64_t;

constexpr i64 ceil_div(i64 n, i64 d) { return (n + d - 1) / d; }

/// Smallest multiple of t that is >= n.
constexpr i64 pad_dim(i64 n, i64 t) { return ceil_div(n, t) * t; }

/// One matrix multiply C = A·B with A: r x p, B: p x c, C: r x c.
struct GemmShape {
    i64 r = 1;
    i64 p = 1;
    i64 c = 1;

    friend auto operator<=>(const GemmShape&, const GemmShape&) = default;
};

inline void validate(const GemmShape& s) {
    if (s.r < 1 || s.p < 1 || s.c < 1)
        throw ShapeError("GemmShape dims must be >= 1");
}

/// Accelerator geometry: tr x tc output tile served by tr·tc PEs,
/// reduction processed tp elements per tile pair.
struct TileConfig {
    i64 tr = 1;
    i64 tc = 1;
    i64 tp = 1;

    i64 pe_count() const { return tr * tc; }

    friend auto operator<=>(const TileConfig&, const TileConfig&) = default;
};

inline void validate(const TileConfig& cfg) {
    if (cfg.tr < 1 || cfg.tc < 1 || cfg.tp < 1)
        throw ShapeError("TileConfig dims must be >= 1");
}

inline std::string to_string(const TileConfig& cfg) {
    return "<" + std::to_string(cfg.tr) + "," + std::to_string(cfg.tc) + "," +
           std::to_string(cfg.tp) + ">";
}

} // namespace gemmsim
