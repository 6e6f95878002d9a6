// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gemmsim/device.hpp"
#include "gemmsim/report.hpp"
#include "gemmsim/units.hpp"

using namespace gemmsim;

TEST_CASE("quantity parsing") {
    CHECK(parse_rate("30Gbps") == 30e9);
    CHECK(parse_rate("8GBps") == 64e9);
    CHECK(parse_rate("3Gbps") == 3e9);
    CHECK(parse_rate("1.5MB/s") == 12e6);
    CHECK(parse_rate("2500000") == 2.5e6);
    CHECK(parse_freq("250MHz") == 250e6);
    CHECK(parse_freq("1.2GHz") == 1.2e9);
    CHECK(parse_bits("75.9Mb") == 75.9e6);
    CHECK(parse_bits("2kB") == 16e3);
    CHECK(parse_bits("512") == 512);

    CHECK_THROWS_AS(parse_rate("fast"), ParseError);
    CHECK_THROWS_AS(parse_rate("30Gparsecs"), ParseError);
    CHECK_THROWS_AS(parse_freq("30Gbps"), ParseError);
}

TEST_CASE("device profile parsing") {
    const std::string text = R"({
        "name": "test-dev",
        "wl": 32, "q": 10, "v": 5,
        "f_clk": "250MHz",
        "b_mem": "30Gbps",
        "b_pcie": 8e9,
        "dsp_budget": 6840,
        "bram_budget": "75.9Mb",
        "fpga_power": 8.0,
        "cpu_tiling_bw": "8GBps"
    })";
    const DeviceProfile dev = parse_device(text, "test");
    CHECK(dev.name == "test-dev");
    CHECK(dev.f_clk == 250e6);
    CHECK(dev.b_mem == 30e9);
    CHECK(dev.b_pcie == 8e9);
    CHECK(dev.bram_budget_bits == 75'900'000);
    CHECK(dev.cpu_tiling_bw == 8e9); // bytes/s

    CHECK_THROWS_AS(parse_device("{}", "t"), ParseError);
    CHECK_THROWS_AS(parse_device(R"({"wl": 32})", "t"), ParseError);
    // invariant violations surface as parse errors with the origin attached
    const std::string bad = R"({"wl": 32, "q": -1, "v": 5, "f_clk": 1, "b_mem": 1,
        "b_pcie": 1, "dsp_budget": 1, "bram_budget": 1, "fpga_power": 1})";
    CHECK_THROWS_AS(parse_device(bad, "t"), ParseError);
}

TEST_CASE("digest is stable and input-sensitive") {
    const char* path_a = "digest_test_a.tmp";
    const char* path_b = "digest_test_b.tmp";
    {
        std::ofstream(path_a) << "alpha";
        std::ofstream(path_b) << "beta";
    }
    const std::string d1 = digest_files({path_a, path_b});
    const std::string d2 = digest_files({path_a, path_b});
    CHECK(d1 == d2);
    CHECK(d1.size() == 16);
    {
        std::ofstream(path_b) << "gamma";
    }
    CHECK(digest_files({path_a, path_b}) != d1);
    std::remove(path_a);
    std::remove(path_b);

    CHECK_THROWS_AS(digest_files({"does_not_exist.tmp"}), ParseError);
}

TEST_CASE("report rendering is deterministic") {
    Report r;
    r.command = "demo";
    r.inputs_digest = "0123456789abcdef";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    rows.push_back({{"layer", "a"}, {"cycles", 215}, {"share", 0.25}});
    rows.push_back({{"layer", "b"}, {"cycles", 618}, {"share", 0.7512345}});
    r.sections["rows"] = rows;
    r.sections["summary"] = {{"total", 833}, {"ok", true}};

    const std::string j1 = to_json_text(r);
    const std::string j2 = to_json_text(r);
    CHECK(j1 == j2);
    CHECK(j1.find("\"tool_version\"") != std::string::npos);
    CHECK(j1.find("0123456789abcdef") != std::string::npos);

    const std::string csv = to_csv_text(r);
    CHECK(csv == to_csv_text(r));
    CHECK(csv.find("layer,cycles,share") != std::string::npos);
    CHECK(csv.find("b,618,0.7512345") != std::string::npos);

    const std::string table = to_table_text(r);
    CHECK(table == to_table_text(r));
    CHECK(table.find("== rows ==") != std::string::npos);
    CHECK(table.find("total: 833") != std::string::npos);
}
