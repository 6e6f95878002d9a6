// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gemmsim/perf.hpp"

using namespace gemmsim;

namespace {
DeviceProfile fp32_card() {
    DeviceProfile dev;
    dev.wl = 32;
    dev.q = 10;
    dev.v = 5;
    dev.f_clk = 250e6;
    dev.b_mem = 30e9;
    dev.b_pcie = 8e9;
    dev.dsp_budget = 6840;
    dev.bram_budget_bits = 75'900'000;
    dev.fpga_power_w = 8.0;
    return dev;
}
} // namespace

TEST_CASE("off-chip traffic golden values") {
    CHECK(data_mem_bits(GemmShape{16, 64, 16}, TileConfig{16, 16, 64}, 32) == 73728);
    CHECK(data_mem_bits(GemmShape{1, 1, 1}, TileConfig{1, 1, 1}, 1) == 3);

    // linear in the tile-column count when tc | C
    const GemmShape base{16, 64, 16};
    const GemmShape doubled{16, 64, 32};
    const TileConfig cfg{16, 16, 64};
    CHECK(data_mem_bits(doubled, cfg, 32) == 2 * data_mem_bits(base, cfg, 32));
}

TEST_CASE("padded vs literal reduction dim in the traffic term") {
    const TileConfig cfg{4, 4, 16};
    const GemmShape s{8, 20, 8}; // tp does not divide P
    const i64 padded = data_mem_bits(s, cfg, 32);
    const i64 literal = data_mem_bits(s, cfg, 32, /*literal_p=*/true);
    CHECK(padded > literal);
    // wl * 2*2 * ((4*32 + 4*32) + 16) vs bare P=20
    CHECK(padded == 32 * 4 * ((4 * 32 + 4 * 32) + 16));
    CHECK(literal == 32 * 4 * ((4 * 20 + 4 * 20) + 16));

    const GemmShape aligned{8, 32, 8};
    CHECK(data_mem_bits(aligned, cfg, 32) == data_mem_bits(aligned, cfg, 32, true));
}

TEST_CASE("memory latency is traffic over bandwidth") {
    CHECK(latency_mem_s(73728, 30e9) == doctest::Approx(2.4576e-6).epsilon(1e-12));
    CHECK(latency_mem_s(0, 5e9) == 0.0);
    // 10% of the bandwidth costs exactly 10x the time
    CHECK(latency_mem_s(73728, 3e9) ==
          doctest::Approx(10.0 * latency_mem_s(73728, 30e9)).epsilon(1e-12));
}

TEST_CASE("compute cycles golden values") {
    CHECK(cycles_compute(GemmShape{1, 1, 1}, TileConfig{1, 1, 1}, 0) == 2);
    CHECK(cycles_compute(GemmShape{16, 64, 16}, TileConfig{16, 16, 64}, 10) == 215);
    CHECK(cycles_compute(GemmShape{32, 128, 16}, TileConfig{16, 16, 64}, 10) == 618);
}

TEST_CASE("cycles are non-increasing in tp when every tp divides P") {
    const GemmShape s{24, 144, 24};
    const TileConfig base{8, 8, 1};
    i64 prev = -1;
    for (i64 tp : {1, 2, 3, 4, 6, 8, 12, 16, 24, 48, 144}) {
        TileConfig cfg = base;
        cfg.tp = tp;
        const i64 cur = cycles_compute(s, cfg, 10);
        if (prev >= 0) CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("kernel latency combines compute and memory terms") {
    const DeviceProfile dev = fp32_card();
    const GemmShape s{16, 64, 16};
    const TileConfig cfg{16, 16, 64};
    CHECK(latency_total_s(s, cfg, dev) == doctest::Approx(3.3176e-6).epsilon(1e-12));

    DeviceProfile infinite_mem = dev;
    infinite_mem.b_mem = 1e30;
    CHECK(latency_total_s(s, cfg, infinite_mem) ==
          doctest::Approx(215.0 / 250e6).epsilon(1e-9));

    DeviceProfile fast_clk = dev;
    fast_clk.f_clk = 2 * dev.f_clk;
    const double mem = latency_mem_s(data_mem_bits(s, cfg, dev.wl), dev.b_mem);
    CHECK(latency_total_s(s, cfg, fast_clk) - mem ==
          doctest::Approx((latency_total_s(s, cfg, dev) - mem) / 2.0).epsilon(1e-9));
}

TEST_CASE("host link traffic and latency") {
    CHECK(data_pcie_bits(GemmShape{1, 1, 1}, 32) == 96);
    CHECK(data_pcie_bits(GemmShape{16, 64, 16}, 32) == 73728);
    CHECK(data_pcie_bits(GemmShape{16, 64, 16}, 0) == 0);

    CHECK(latency_pcie_s(96, 96.0) == 1.0);
    CHECK(latency_pcie_s(73728, 8e9) == doctest::Approx(9.216e-6).epsilon(1e-12));
    CHECK(latency_pcie_s(0, 8e9) == 0.0);
}

TEST_CASE("full estimate composes the latency chain") {
    const DeviceProfile dev = fp32_card();
    const GemmShape s{16, 64, 16};
    const TileConfig cfg{16, 16, 64};
    const PerfEstimate e = estimate_gemm(s, cfg, dev);
    CHECK(e.overall_latency == doctest::Approx(1.25336e-5).epsilon(1e-12));
    CHECK(e.latency_tiling == 0.0);
    CHECK(e.overall_latency ==
          doctest::Approx(e.latency_pcie + e.latency_total + e.latency_tiling)
              .epsilon(1e-15));
    // tile-sized shape: no padding waste
    CHECK(e.useful_ops == e.padded_ops);
    CHECK(e.useful_ops == 2 * 16 * 64 * 16);
}

TEST_CASE("padding waste shows up in the op counts") {
    const DeviceProfile dev = fp32_card();
    const TileConfig cfg{16, 16, 64};
    const GemmShape s{17, 64, 16}; // R pads 17 -> 32
    const PerfEstimate e = estimate_gemm(s, cfg, dev);
    CHECK(e.padded_ops * 17 == e.useful_ops * 32);
    CHECK(e.padded_ops >= e.useful_ops);

    // equality iff every dim divides
    CHECK(estimate_gemm(GemmShape{32, 64, 16}, cfg, dev).padded_ops ==
          estimate_gemm(GemmShape{32, 64, 16}, cfg, dev).useful_ops);
}

TEST_CASE("tiling term uses the padded images over the host rate") {
    DeviceProfile dev = fp32_card();
    dev.cpu_tiling_bw = 4e9; // bytes/s
    const GemmShape s{17, 64, 16};
    const TileConfig cfg{16, 16, 64};
    const PerfEstimate e = estimate_gemm(s, cfg, dev);
    const double bytes = (32.0 * 64 + 64.0 * 16 + 32.0 * 16) * 32 / 8.0;
    CHECK(e.latency_tiling == doctest::Approx(bytes / 4e9).epsilon(1e-12));
    CHECK(e.overall_latency ==
          doctest::Approx(e.latency_pcie + e.latency_total + e.latency_tiling)
              .epsilon(1e-15));
}

TEST_CASE("resource model golden values") {
    const DeviceProfile dev = fp32_card();
    const ResourceEstimate r = resources(TileConfig{16, 16, 64}, dev);
    CHECK(r.dsp == 1280);
    const double util = static_cast<double>(r.dsp) / static_cast<double>(dev.dsp_budget);
    CHECK(util == doctest::Approx(0.1871).epsilon(1e-3));
    CHECK(std::abs(util - 0.188) < 0.002); // within 0.2pp of the reported number
    CHECK(r.bram_bits == 32 * (1024 + 1024 + 2816));
    CHECK(r.bram_bits == 155648);

    CHECK(resources(TileConfig{36, 36, 72}, dev).dsp == 6480);
    CHECK(resources(TileConfig{36, 36, 72}, dev).dsp <= dev.dsp_budget);
}

TEST_CASE("performance per watt") {
    PerfEstimate e;
    e.useful_ops = 32768;
    e.overall_latency = 2e-6;
    e.latency_total = 1e-6;
    CHECK(ppw_gops_per_watt(e, 8.0) == doctest::Approx(2.048).epsilon(1e-12));
    CHECK(ppw_gops_per_watt(e, 16.0) ==
          doctest::Approx(ppw_gops_per_watt(e, 8.0) / 2.0).epsilon(1e-12));
    // kernel-only boundary uses latency_total
    CHECK(ppw_gops_per_watt(e, 8.0, /*kernel_only=*/true) ==
          doctest::Approx(4.096).epsilon(1e-12));
}

TEST_CASE("device profile validation") {
    DeviceProfile dev = fp32_card();
    CHECK_NOTHROW(validate(dev));
    dev.q = -1;
    CHECK_THROWS_AS(validate(dev), ParseError);
    dev = fp32_card();
    dev.b_mem = 0;
    CHECK_THROWS_AS(validate(dev), ParseError);
    dev = fp32_card();
    dev.v = 0;
    CHECK_THROWS_AS(validate(dev), ParseError);
    dev = fp32_card();
    dev.cpu_tiling_bw = -1;
    CHECK_THROWS_AS(validate(dev), ParseError);
}
