// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gemmsim/perf.hpp"
#include "gemmsim/types.hpp"
#include "gemmsim/workload.hpp"

namespace gemmsim {

struct SearchSpace {
    std::vector<i64> tr_values;
    std::vector<i64> tc_values;
    std::vector<i64> tp_values;
    double utilization_cap = 1.0; // fraction of each resource budget usable
};

void validate(const SearchSpace& space);

struct DseOptions {
    ModelOptions model;
    bool weighted_avg = false; // ops-weighted mean instead of unweighted
    double utilization_cap = 1.0;
};

/// Aggregate of one layer's GEMMs (all passes x invocations) on one config.
struct LayerPerf {
    std::string layer;
    PerfEstimate est; // field-wise sums over the layer's GEMM invocations
    double ppw = 0;   // GOp/s/W
};

struct DseRecord {
    TileConfig cfg;
    std::vector<LayerPerf> per_layer; // workload layer order
    ResourceEstimate res;
    double avg_ppw = 0;
    bool feasible = false;
};

bool config_feasible(const TileConfig& cfg, const DeviceProfile& dev, double cap);

/// Cartesian product of the value sets in lexicographic (tr, tc, tp) order,
/// keeping only configs whose resources fit within cap * budget.
std::vector<TileConfig> enumerate_configs(const SearchSpace& space,
                                          const DeviceProfile& dev);

/// Evaluate one feasible config over a workload; throws FeasibilityError if
/// the config exceeds the capped budgets.
DseRecord evaluate_config(const TileConfig& cfg, const std::vector<WorkloadGemm>& wl,
                          const DeviceProfile& dev, const DseOptions& opt = {});

/// Evaluate many configs, optionally fanning out over threads. Results are
/// positionally deterministic regardless of thread count.
std::vector<DseRecord> evaluate_configs(const std::vector<TileConfig>& cfgs,
                                        const std::vector<WorkloadGemm>& wl,
                                        const DeviceProfile& dev, const DseOptions& opt,
                                        int threads = 1);

/// Highest avg_ppw; ties go to the lexicographically smallest config.
std::optional<DseRecord> best_global(const std::vector<DseRecord>& records);

struct LayerChoice {
    TileConfig cfg;
    double ppw = 0;
};

/// Per-layer argmax of layer PPW with the same tie rule.
std::map<std::string, LayerChoice> best_per_layer(const std::vector<DseRecord>& records);

enum class Device { fpga, cpu };

const char* device_name(Device d);

struct Assignment {
    std::map<std::string, Device> per_layer;
    double overall_ppw = 0;
};

/// Time-weighted aggregate PPW: total ops / sum(ops_l / ppw_l). Valid across
/// devices with different powers, where per-layer PPWs cannot be averaged
/// arithmetically.
double aggregate_ppw(const std::map<std::string, double>& ppw,
                     const std::map<std::string, i64>& layer_ops);

/// Pick the device with the higher PPW per layer (FPGA on ties) and report
/// the aggregate PPW of the mixed schedule.
Assignment assign_devices(const std::map<std::string, double>& fpga_ppw,
                          const std::map<std::string, double>& cpu_ppw,
                          const std::map<std::string, i64>& layer_ops);

} // namespace gemmsim
