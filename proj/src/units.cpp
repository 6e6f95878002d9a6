// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/units.hpp"

#include <cctype>
#include <cstdlib>

namespace gemmsim {

namespace {

struct Quantity {
    double value = 0;
    std::string unit; // suffix after the number and SI prefix, may be empty
};

double prefix_factor(char c, bool& consumed) {
    consumed = true;
    switch (c) {
        case 'k':
        case 'K': return 1e3;
        case 'M': return 1e6;
        case 'G': return 1e9;
        case 'T': return 1e12;
        default: consumed = false; return 1.0;
    }
}

Quantity split(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("not a quantity: '" + text + "'");
    std::string rest(end);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.erase(rest.begin());
    Quantity q;
    q.value = v;
    q.unit = rest;
    return q;
}

// Returns multiplier to bits (per second handled by caller via suffix list).
double unit_to_bits(const std::string& unit, const std::string& text) {
    if (unit == "b" || unit == "bit" || unit == "bits") return 1.0;
    if (unit == "B" || unit == "byte" || unit == "bytes") return 8.0;
    throw ParseError("unknown size unit in '" + text + "'");
}

} // namespace

double parse_rate(const std::string& text) {
    Quantity q = split(text);
    if (q.unit.empty()) return q.value;
    bool has_prefix = false;
    const double p = prefix_factor(q.unit.front(), has_prefix);
    std::string u = has_prefix ? q.unit.substr(1) : q.unit;
    if (u == "bps" || u == "b/s") return q.value * p;
    if (u == "Bps" || u == "B/s") return q.value * p * 8.0;
    if (u == "Hz") return q.value * p;
    throw ParseError("unknown rate unit in '" + text + "'");
}

double parse_bits(const std::string& text) {
    Quantity q = split(text);
    if (q.unit.empty()) return q.value;
    bool has_prefix = false;
    const double p = prefix_factor(q.unit.front(), has_prefix);
    std::string u = has_prefix ? q.unit.substr(1) : q.unit;
    return q.value * p * unit_to_bits(u, text);
}

double parse_freq(const std::string& text) {
    Quantity q = split(text);
    if (q.unit.empty()) return q.value;
    bool has_prefix = false;
    const double p = prefix_factor(q.unit.front(), has_prefix);
    std::string u = has_prefix ? q.unit.substr(1) : q.unit;
    if (u == "Hz") return q.value * p;
    throw ParseError("unknown frequency unit in '" + text + "'");
}

} // namespace gemmsim
