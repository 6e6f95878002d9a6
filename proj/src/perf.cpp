// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/perf.hpp"

namespace gemmsim {

void validate(const DeviceProfile& dev) {
    if (dev.wl < 1) throw ParseError("device: wl must be >= 1");
    if (dev.q < 0) throw ParseError("device: q must be >= 0");
    if (dev.v < 1) throw ParseError("device: v must be >= 1");
    if (dev.f_clk <= 0) throw ParseError("device: f_clk must be > 0");
    if (dev.b_mem <= 0) throw ParseError("device: b_mem must be > 0");
    if (dev.b_pcie <= 0) throw ParseError("device: b_pcie must be > 0");
    if (dev.dsp_budget <= 0) throw ParseError("device: dsp_budget must be > 0");
    if (dev.bram_budget_bits <= 0) throw ParseError("device: bram_budget must be > 0");
    if (dev.fpga_power_w <= 0) throw ParseError("device: fpga_power must be > 0");
    if (dev.cpu_tiling_bw < 0) throw ParseError("device: cpu_tiling_bw must be >= 0");
}

i64 data_mem_bits(const GemmShape& s, const TileConfig& cfg, int wl, bool literal_p) {
    const i64 p_eff = literal_p ? s.p : pad_dim(s.p, cfg.tp);
    const i64 out_tiles = ceil_div(s.r, cfg.tr) * ceil_div(s.c, cfg.tc);
    return wl * out_tiles * ((cfg.tr * p_eff + cfg.tc * p_eff) + cfg.tc * cfg.tr);
}

double latency_mem_s(i64 data_mem, double b_mem) {
    return static_cast<double>(data_mem) / b_mem;
}

i64 cycles_compute(const GemmShape& s, const TileConfig& cfg, int q) {
    const i64 q1 = q + 1;
    return ceil_div(s.r, cfg.tr) * ceil_div(s.c, cfg.tc) *
           (ceil_div(s.p, cfg.tp) * (cfg.tp + cfg.tc + cfg.tr - 2) + q1 * q1);
}

double latency_total_s(const GemmShape& s, const TileConfig& cfg,
                       const DeviceProfile& dev, bool literal_p) {
    return static_cast<double>(cycles_compute(s, cfg, dev.q)) / dev.f_clk +
           latency_mem_s(data_mem_bits(s, cfg, dev.wl, literal_p), dev.b_mem);
}

i64 data_pcie_bits(const GemmShape& s, int wl) {
    return wl * (s.r * s.p + s.c * s.p + s.r * s.c);
}

double latency_pcie_s(i64 data_pcie, double b_pcie) {
    return static_cast<double>(data_pcie) / b_pcie;
}

i64 useful_ops(const GemmShape& s) { return 2 * s.r * s.p * s.c; }

i64 padded_ops(const GemmShape& s, const TileConfig& cfg) {
    return 2 * pad_dim(s.r, cfg.tr) * pad_dim(s.p, cfg.tp) * pad_dim(s.c, cfg.tc);
}

PerfEstimate estimate_gemm(const GemmShape& s, const TileConfig& cfg,
                           const DeviceProfile& dev, const ModelOptions& opt) {
    PerfEstimate e;
    e.data_mem = data_mem_bits(s, cfg, dev.wl, opt.literal_data_mem);
    e.latency_mem = latency_mem_s(e.data_mem, dev.b_mem);
    e.cycles_compute = cycles_compute(s, cfg, dev.q);
    e.latency_total = static_cast<double>(e.cycles_compute) / dev.f_clk + e.latency_mem;
    e.data_pcie = data_pcie_bits(s, dev.wl);
    e.latency_pcie = latency_pcie_s(e.data_pcie, dev.b_pcie);
    if (dev.cpu_tiling_bw > 0) {
        // Host touches the padded tile images once each: A and B written
        // tiled, C read back and untiled.
        const i64 rp = pad_dim(s.r, cfg.tr);
        const i64 pp = pad_dim(s.p, cfg.tp);
        const i64 cp = pad_dim(s.c, cfg.tc);
        const double bytes =
            static_cast<double>(rp * pp + pp * cp + rp * cp) * dev.wl / 8.0;
        e.latency_tiling = bytes / dev.cpu_tiling_bw;
    }
    e.overall_latency = e.latency_pcie + e.latency_total + e.latency_tiling;
    e.useful_ops = useful_ops(s);
    e.padded_ops = padded_ops(s, cfg);
    return e;
}

ResourceEstimate resources(const TileConfig& cfg, const DeviceProfile& dev) {
    ResourceEstimate r;
    r.dsp = cfg.tr * cfg.tc * dev.v;
    // Buffer C holds q+1 interleaved partials per PE.
    r.bram_bits =
        dev.wl * (cfg.tr * cfg.tp + cfg.tp * cfg.tc + cfg.tr * cfg.tc * (dev.q + 1));
    return r;
}

double ppw_gops_per_watt(const PerfEstimate& est, double power_w, bool kernel_only) {
    const double latency = kernel_only ? est.latency_total : est.overall_latency;
    return static_cast<double>(est.useful_ops) / latency / power_w / 1e9;
}

} // namespace gemmsim
