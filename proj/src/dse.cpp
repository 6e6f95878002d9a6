// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/dse.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace gemmsim {

void validate(const SearchSpace& space) {
    if (space.tr_values.empty() || space.tc_values.empty() || space.tp_values.empty())
        throw InputError("search space value sets must be non-empty");
    for (i64 v : space.tr_values)
        if (v < 1) throw InputError("tr values must be >= 1");
    for (i64 v : space.tc_values)
        if (v < 1) throw InputError("tc values must be >= 1");
    for (i64 v : space.tp_values)
        if (v < 1) throw InputError("tp values must be >= 1");
    if (!(space.utilization_cap > 0.0 && space.utilization_cap <= 1.0))
        throw InputError("utilization cap must be in (0, 1]");
}

bool config_feasible(const TileConfig& cfg, const DeviceProfile& dev, double cap) {
    const ResourceEstimate r = resources(cfg, dev);
    return static_cast<double>(r.dsp) <= cap * static_cast<double>(dev.dsp_budget) &&
           static_cast<double>(r.bram_bits) <=
               cap * static_cast<double>(dev.bram_budget_bits);
}

std::vector<TileConfig> enumerate_configs(const SearchSpace& space,
                                          const DeviceProfile& dev) {
    validate(space);
    const auto sorted_unique = [](std::vector<i64> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    const std::vector<i64> trs = sorted_unique(space.tr_values);
    const std::vector<i64> tcs = sorted_unique(space.tc_values);
    const std::vector<i64> tps = sorted_unique(space.tp_values);

    std::vector<TileConfig> out;
    for (i64 tr : trs)
        for (i64 tc : tcs)
            for (i64 tp : tps) {
                const TileConfig cfg{tr, tc, tp};
                if (config_feasible(cfg, dev, space.utilization_cap)) out.push_back(cfg);
            }
    return out;
}

DseRecord evaluate_config(const TileConfig& cfg, const std::vector<WorkloadGemm>& wl,
                          const DeviceProfile& dev, const DseOptions& opt) {
    if (!config_feasible(cfg, dev, opt.utilization_cap))
        throw FeasibilityError("config " + to_string(cfg) +
                               " exceeds the capped resource budget");
    DseRecord rec;
    rec.cfg = cfg;
    rec.res = resources(cfg, dev);
    rec.feasible = true;

    // Group the workload's GEMMs by layer, preserving first-seen order.
    for (const WorkloadGemm& g : wl) {
        auto it = std::find_if(rec.per_layer.begin(), rec.per_layer.end(),
                               [&](const LayerPerf& lp) { return lp.layer == g.layer; });
        if (it == rec.per_layer.end()) {
            rec.per_layer.push_back(LayerPerf{g.layer, {}, 0.0});
            it = std::prev(rec.per_layer.end());
        }
        const PerfEstimate e = estimate_gemm(g.shape, cfg, dev, opt.model);
        const double n = static_cast<double>(g.invocations_per_iteration);
        PerfEstimate& acc = it->est;
        acc.data_mem += e.data_mem * g.invocations_per_iteration;
        acc.latency_mem += e.latency_mem * n;
        acc.cycles_compute += e.cycles_compute * g.invocations_per_iteration;
        acc.latency_total += e.latency_total * n;
        acc.data_pcie += e.data_pcie * g.invocations_per_iteration;
        acc.latency_pcie += e.latency_pcie * n;
        acc.latency_tiling += e.latency_tiling * n;
        acc.overall_latency += e.overall_latency * n;
        acc.useful_ops += e.useful_ops * g.invocations_per_iteration;
        acc.padded_ops += e.padded_ops * g.invocations_per_iteration;
    }

    double ppw_sum = 0.0, ops_sum = 0.0, weighted = 0.0;
    for (LayerPerf& lp : rec.per_layer) {
        lp.ppw = ppw_gops_per_watt(lp.est, dev.fpga_power_w, opt.model.kernel_only_ppw);
        ppw_sum += lp.ppw;
        ops_sum += static_cast<double>(lp.est.useful_ops);
        weighted += lp.ppw * static_cast<double>(lp.est.useful_ops);
    }
    if (!rec.per_layer.empty())
        rec.avg_ppw = opt.weighted_avg ? weighted / ops_sum
                                       : ppw_sum / static_cast<double>(rec.per_layer.size());
    return rec;
}

std::vector<DseRecord> evaluate_configs(const std::vector<TileConfig>& cfgs,
                                        const std::vector<WorkloadGemm>& wl,
                                        const DeviceProfile& dev, const DseOptions& opt,
                                        int threads) {
    std::vector<DseRecord> out(cfgs.size());
    if (threads < 1) threads = 1;
    if (threads == 1 || cfgs.size() < 2) {
        for (std::size_t i = 0; i < cfgs.size(); ++i)
            out[i] = evaluate_config(cfgs[i], wl, dev, opt);
        return out;
    }
    const int n = std::min<int>(threads, static_cast<int>(cfgs.size()));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    pool.reserve(n);
    for (int t = 0; t < n; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (std::size_t i = t; i < cfgs.size(); i += n)
                    out[i] = evaluate_config(cfgs[i], wl, dev, opt);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::optional<DseRecord> best_global(const std::vector<DseRecord>& records) {
    const DseRecord* best = nullptr;
    for (const DseRecord& r : records) {
        if (!best || r.avg_ppw > best->avg_ppw ||
            (r.avg_ppw == best->avg_ppw && r.cfg < best->cfg))
            best = &r;
    }
    if (!best) return std::nullopt;
    return *best;
}

std::map<std::string, LayerChoice> best_per_layer(const std::vector<DseRecord>& records) {
    std::map<std::string, LayerChoice> out;
    std::set<std::string> seen;
    for (const DseRecord& r : records) {
        for (const LayerPerf& lp : r.per_layer) {
            auto it = out.find(lp.layer);
            if (it == out.end() || lp.ppw > it->second.ppw ||
                (lp.ppw == it->second.ppw && r.cfg < it->second.cfg))
                out[lp.layer] = LayerChoice{r.cfg, lp.ppw};
        }
    }
    return out;
}

const char* device_name(Device d) { return d == Device::fpga ? "FPGA" : "CPU"; }

double aggregate_ppw(const std::map<std::string, double>& ppw,
                     const std::map<std::string, i64>& layer_ops) {
    double ops_total = 0.0, weighted_time = 0.0;
    for (const auto& [layer, ops] : layer_ops) {
        const auto it = ppw.find(layer);
        if (it == ppw.end()) throw InputError("aggregate_ppw: missing layer " + layer);
        if (it->second <= 0) throw InputError("aggregate_ppw: non-positive PPW for " + layer);
        ops_total += static_cast<double>(ops);
        weighted_time += static_cast<double>(ops) / it->second;
    }
    return ops_total / weighted_time;
}

Assignment assign_devices(const std::map<std::string, double>& fpga_ppw,
                          const std::map<std::string, double>& cpu_ppw,
                          const std::map<std::string, i64>& layer_ops) {
    const auto same_keys = [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return false;
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end(); ++ia, ++ib)
            if (ia->first != ib->first) return false;
        return true;
    };
    if (!same_keys(fpga_ppw, cpu_ppw) || !same_keys(fpga_ppw, layer_ops))
        throw InputError("assign_devices: layer key sets differ");

    Assignment a;
    std::map<std::string, double> chosen;
    for (const auto& [layer, f] : fpga_ppw) {
        const double c = cpu_ppw.at(layer);
        const Device d = (f >= c) ? Device::fpga : Device::cpu; // FPGA on ties
        a.per_layer[layer] = d;
        chosen[layer] = (d == Device::fpga) ? f : c;
    }
    a.overall_ppw = aggregate_ppw(chosen, layer_ops);
    return a;
}

} // namespace gemmsim
