// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/device.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gemmsim/units.hpp"

namespace gemmsim {

namespace {
using nlohmann::json;

double number_or_quantity(const json& j, const char* key, const std::string& ctx,
                          double (*parser)(const std::string&)) {
    const json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parser(v.get<std::string>());
    throw ParseError(ctx + ": field '" + key + "' must be a number or quantity string");
}
} // namespace

DeviceProfile parse_device(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(origin + ": top level must be an object");

    DeviceProfile dev;
    try {
        dev.name = j.value("name", "device");
        dev.wl = j.at("wl").get<int>();
        dev.q = j.at("q").get<int>();
        dev.v = j.at("v").get<int>();
        dev.f_clk = number_or_quantity(j, "f_clk", origin, &parse_freq);
        dev.b_mem = number_or_quantity(j, "b_mem", origin, &parse_rate);
        dev.b_pcie = number_or_quantity(j, "b_pcie", origin, &parse_rate);
        dev.dsp_budget = j.at("dsp_budget").get<i64>();
        dev.bram_budget_bits =
            static_cast<i64>(number_or_quantity(j, "bram_budget", origin, &parse_bits));
        dev.fpga_power_w = j.at("fpga_power").get<double>();
        if (j.contains("cpu_tiling_bw")) {
            // Stored in bytes/s; quantity strings parse to bits/s.
            const json& v = j["cpu_tiling_bw"];
            dev.cpu_tiling_bw = v.is_string() ? parse_rate(v.get<std::string>()) / 8.0
                                              : v.get<double>();
        }
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    validate(dev);
    return dev;
}

DeviceProfile load_device(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open device file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_device(ss.str(), path);
}

} // namespace gemmsim
