// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gemmsim/types.hpp"

namespace gemmsim {

/// Platform constants of one accelerator card. All rates in SI base units:
/// bits/s, Hz, W; cpu_tiling_bw in bytes/s (0 disables the tiling term).
struct DeviceProfile {
    std::string name = "device";
    int wl = 32;                        // element wordlength, bits
    int q = 10;                         // multiplier latency, cycles
    int v = 5;                          // DSPs per MAC unit
    double f_clk = 250e6;               // Hz
    double b_mem = 30e9;                // off-chip memory bandwidth, bits/s
    double b_pcie = 64e9;               // host link bandwidth, bits/s
    i64 dsp_budget = 6840;              // DSP blocks on the device
    i64 bram_budget_bits = 75'900'000;  // on-chip RAM, bits
    double fpga_power_w = 8.0;
    double cpu_tiling_bw = 0.0;         // bytes/s, 0 = ignore tiling time
};

void validate(const DeviceProfile& dev);

/// All latency/traffic quantities of one GEMM on one configuration.
struct PerfEstimate {
    i64 data_mem = 0;         // bits moved between off-chip memory and the kernel
    double latency_mem = 0;   // s
    i64 cycles_compute = 0;
    double latency_total = 0; // s, kernel compute + off-chip memory
    i64 data_pcie = 0;        // bits over the host link
    double latency_pcie = 0;  // s
    double latency_tiling = 0;// s, host-side tiling/untiling
    double overall_latency = 0; // s = pcie + total + tiling
    i64 useful_ops = 0;       // 2*R*P*C, unpadded
    i64 padded_ops = 0;       // 2*R'*P'*C'
};

struct ResourceEstimate {
    i64 dsp = 0;
    i64 bram_bits = 0;
};

struct ModelOptions {
    // The accelerator streams whole tiles, so the memory-traffic term uses
    // the padded reduction dim by default; literal_data_mem reproduces the
    // bare-P variant for comparison.
    bool literal_data_mem = false;
    bool kernel_only_ppw = false; // PPW over latency_total instead of overall
};

/// Off-chip traffic: per output tile, stream the tr x P' and tc x P' operand
/// strips and write the tr x tc result back.
i64 data_mem_bits(const GemmShape& s, const TileConfig& cfg, int wl,
                  bool literal_p = false);

double latency_mem_s(i64 data_mem, double b_mem);

/// Mesh cycles: per output tile, ceil(P/tp) passes of tp+tc+tr-2 cycles plus
/// the (q+1)^2 reduction of the interleaved partials.
i64 cycles_compute(const GemmShape& s, const TileConfig& cfg, int q);

/// Kernel latency with operands already resident in off-chip memory.
double latency_total_s(const GemmShape& s, const TileConfig& cfg,
                       const DeviceProfile& dev, bool literal_p = false);

/// Host-link traffic: the three logical (unpadded) matrices.
i64 data_pcie_bits(const GemmShape& s, int wl);

double latency_pcie_s(i64 data_pcie, double b_pcie);

i64 useful_ops(const GemmShape& s);
i64 padded_ops(const GemmShape& s, const TileConfig& cfg);

/// Full latency breakdown for one GEMM: host transfer + kernel + optional
/// host tiling time.
PerfEstimate estimate_gemm(const GemmShape& s, const TileConfig& cfg,
                           const DeviceProfile& dev, const ModelOptions& opt = {});

ResourceEstimate resources(const TileConfig& cfg, const DeviceProfile& dev);

/// Performance per watt in GOp/s/W over the estimate's overall latency (or
/// kernel-only latency when selected).
double ppw_gops_per_watt(const PerfEstimate& est, double power_w,
                         bool kernel_only = false);

} // namespace gemmsim
