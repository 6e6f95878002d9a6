// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gemmsim/errors.hpp"

namespace gemmsim {

// Quantity strings carry an SI prefix and a unit: "30Gbps" = 30e9 bits/s,
// "8GBps" = 64e9 bits/s, "250MHz" = 250e6 Hz, "75.9Mb" = 75.9e6 bits.
// Bare numbers are taken as already being in the base unit.

/// Parse a rate into bits/s (suffix bps / b/s / Bps / B/s / Hz).
double parse_rate(const std::string& text);

/// Parse a size into bits (suffix b / bit / B).
double parse_bits(const std::string& text);

/// Parse a frequency into Hz.
double parse_freq(const std::string& text);

} // namespace gemmsim
