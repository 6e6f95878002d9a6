// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: loads device/network files, dispatches to the
// library, and writes deterministic reports (table, JSON, or CSV).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gemmsim/device.hpp"
#include "gemmsim/dse.hpp"
#include "gemmsim/gemm.hpp"
#include "gemmsim/kernels.hpp"
#include "gemmsim/perf.hpp"
#include "gemmsim/report.hpp"
#include "gemmsim/systolic.hpp"
#include "gemmsim/units.hpp"
#include "gemmsim/workload.hpp"

namespace {

using namespace gemmsim;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

struct OutputOptions {
    bool json = false;
    bool csv = false;
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    auto* j = cmd->add_flag("--json", out.json, "emit JSON");
    cmd->add_flag("--csv", out.csv, "emit CSV")->excludes(j);
    cmd->add_option("--out", out.out_path, "write the report to a file");
}

int emit(const Report& report, const OutputOptions& out) {
    const std::string text = out.json  ? to_json_text(report)
                             : out.csv ? to_csv_text(report)
                                       : to_table_text(report);
    if (out.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << out.out_path << "\n";
            return kExitInputError;
        }
        f << text;
    }
    return kExitOk;
}

std::vector<i64> parse_list(const std::string& text, const std::string& what) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 1) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad " + what + " list entry: '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError(what + " list is empty");
    return out;
}

void apply_kernel_choice(const std::string& choice) {
    if (choice.empty() || choice == "auto") return;
    if (choice == "scalar") {
        kernels::set_backend(kernels::Backend::scalar);
    } else if (choice == "avx2") {
        kernels::set_backend(kernels::Backend::avx2);
    } else {
        throw ParseError("unknown kernel backend: " + choice);
    }
}

double layer_ppw_from_est(const PerfEstimate& est, const DeviceProfile& dev,
                          bool kernel_only) {
    return ppw_gops_per_watt(est, dev.fpga_power_w, kernel_only);
}

// ---------------------------------------------------------------------------
// model

int cmd_model(const std::string& device_file, const std::string& network_file,
              i64 tr, i64 tc, i64 tp, const std::string& bmem_override,
              const ModelOptions& mopt, const OutputOptions& out) {
    DeviceProfile dev = load_device(device_file);
    if (!bmem_override.empty()) dev.b_mem = parse_rate(bmem_override);
    validate(dev);
    const Network net = load_network(network_file);
    const TileConfig cfg{tr, tc, tp};
    validate(cfg);

    Report report;
    report.command = "model";
    report.inputs_digest = digest_files({device_file, network_file});

    const std::vector<WorkloadGemm> wl = training_workload(net.layers, net.batch);

    ordered_json gemm_rows = ordered_json::array();
    struct LayerAgg {
        std::string name;
        PerfEstimate est;
    };
    std::vector<LayerAgg> layers;
    for (const WorkloadGemm& g : wl) {
        const PerfEstimate e = estimate_gemm(g.shape, cfg, dev, mopt);
        ordered_json row;
        row["layer"] = g.layer;
        row["pass"] = pass_name(g.pass);
        row["r"] = g.shape.r;
        row["p"] = g.shape.p;
        row["c"] = g.shape.c;
        row["invocations_per_iteration"] = g.invocations_per_iteration;
        row["data_mem"] = e.data_mem;
        row["latency_mem"] = e.latency_mem;
        row["cycles_compute"] = e.cycles_compute;
        row["latency_total"] = e.latency_total;
        row["data_pcie"] = e.data_pcie;
        row["latency_pcie"] = e.latency_pcie;
        row["latency_tiling"] = e.latency_tiling;
        row["overall_latency"] = e.overall_latency;
        row["useful_ops"] = e.useful_ops;
        row["padded_ops"] = e.padded_ops;
        gemm_rows.push_back(std::move(row));

        auto it = std::find_if(layers.begin(), layers.end(),
                               [&](const LayerAgg& l) { return l.name == g.layer; });
        if (it == layers.end()) {
            layers.push_back(LayerAgg{g.layer, {}});
            it = std::prev(layers.end());
        }
        const double n = static_cast<double>(g.invocations_per_iteration);
        it->est.data_mem += e.data_mem * g.invocations_per_iteration;
        it->est.latency_mem += e.latency_mem * n;
        it->est.cycles_compute += e.cycles_compute * g.invocations_per_iteration;
        it->est.latency_total += e.latency_total * n;
        it->est.data_pcie += e.data_pcie * g.invocations_per_iteration;
        it->est.latency_pcie += e.latency_pcie * n;
        it->est.latency_tiling += e.latency_tiling * n;
        it->est.overall_latency += e.overall_latency * n;
        it->est.useful_ops += e.useful_ops * g.invocations_per_iteration;
        it->est.padded_ops += e.padded_ops * g.invocations_per_iteration;
    }
    report.sections["gemms"] = std::move(gemm_rows);

    ordered_json layer_rows = ordered_json::array();
    for (const LayerAgg& l : layers) {
        ordered_json row;
        row["layer"] = l.name;
        row["latency_total"] = l.est.latency_total;
        row["latency_pcie"] = l.est.latency_pcie;
        row["latency_tiling"] = l.est.latency_tiling;
        row["overall_latency"] = l.est.overall_latency;
        row["kernel_share"] = l.est.latency_total / l.est.overall_latency;
        row["pcie_share"] = l.est.latency_pcie / l.est.overall_latency;
        row["tiling_share"] = l.est.latency_tiling / l.est.overall_latency;
        row["useful_ops"] = l.est.useful_ops;
        row["padded_ops"] = l.est.padded_ops;
        row["ppw"] = layer_ppw_from_est(l.est, dev, mopt.kernel_only_ppw);
        layer_rows.push_back(std::move(row));
    }
    report.sections["layers"] = std::move(layer_rows);

    const ResourceEstimate res = resources(cfg, dev);
    const bool feasible = config_feasible(cfg, dev, 1.0);
    ordered_json rj;
    rj["tr"] = cfg.tr;
    rj["tc"] = cfg.tc;
    rj["tp"] = cfg.tp;
    rj["pe_count"] = cfg.pe_count();
    rj["dsp"] = res.dsp;
    rj["dsp_util"] = static_cast<double>(res.dsp) / static_cast<double>(dev.dsp_budget);
    rj["bram_bits"] = res.bram_bits;
    rj["bram_util"] =
        static_cast<double>(res.bram_bits) / static_cast<double>(dev.bram_budget_bits);
    rj["feasible"] = feasible;
    report.sections["resources"] = std::move(rj);

    if (!feasible)
        std::cerr << "note: config " << to_string(cfg)
                  << " does not fit the device budgets\n";
    return emit(report, out);
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const std::string& device_file, i64 r, i64 p, i64 c, i64 tr, i64 tc,
                 i64 tp, unsigned seed, const OutputOptions& out) {
    const DeviceProfile dev = load_device(device_file);
    const GemmShape shape{r, p, c};
    validate(shape);
    const TileConfig cfg{tr, tc, tp};
    validate(cfg);

    std::mt19937 rng(seed);
    const auto rand_matrix = [&rng](i64 rows, i64 cols) {
        Matrix<std::int32_t> m(static_cast<int>(rows), static_cast<int>(cols));
        for (auto& v : m.data) v = static_cast<std::int32_t>(rng() % 17) - 8;
        return m;
    };
    const Matrix<std::int32_t> a = rand_matrix(shape.r, shape.p);
    const Matrix<std::int32_t> b = rand_matrix(shape.p, shape.c);

    const SimResult<std::int32_t> sim = simulate_gemm(a, b, cfg, dev.q);
    const Matrix<std::int32_t> ref = gemm_reference(a, b);
    const i64 model_cycles = cycles_compute(shape, cfg, dev.q);

    const auto checksum = [](const Matrix<std::int32_t>& m) {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(fnv1a(
                          m.data.data(), m.data.size() * sizeof(std::int32_t))));
        return std::string(buf);
    };

    Report report;
    report.command = "simulate";
    report.inputs_digest = digest_files({device_file});
    ordered_json row;
    row["r"] = shape.r;
    row["p"] = shape.p;
    row["c"] = shape.c;
    row["tr"] = cfg.tr;
    row["tc"] = cfg.tc;
    row["tp"] = cfg.tp;
    row["q"] = dev.q;
    row["seed"] = seed;
    row["kernel_backend"] = kernels::backend_name(kernels::active_backend());
    row["sim_cycles"] = sim.cycles;
    row["model_cycles"] = model_cycles;
    row["cycles_match"] = sim.cycles == model_cycles;
    row["tiles_processed"] = sim.tiles_processed;
    row["output_checksum"] = checksum(sim.output);
    row["reference_checksum"] = checksum(ref);
    row["outputs_match"] = sim.output == ref;
    report.sections["simulation"] = ordered_json::array({row});
    return emit(report, out);
}

// ---------------------------------------------------------------------------
// workload

int cmd_workload(const std::string& network_file, const OutputOptions& out) {
    const Network net = load_network(network_file);
    const std::vector<WorkloadGemm> wl = training_workload(net.layers, net.batch);

    Report report;
    report.command = "workload";
    report.inputs_digest = digest_files({network_file});
    ordered_json rows = ordered_json::array();
    i64 total_ops = 0;
    for (const WorkloadGemm& g : wl) {
        ordered_json row;
        row["layer"] = g.layer;
        row["pass"] = pass_name(g.pass);
        row["r"] = g.shape.r;
        row["p"] = g.shape.p;
        row["c"] = g.shape.c;
        row["invocations_per_iteration"] = g.invocations_per_iteration;
        row["ops"] = g.ops;
        rows.push_back(std::move(row));
        total_ops += g.ops;
    }
    report.sections["gemms"] = std::move(rows);
    ordered_json totals;
    totals["network"] = net.name;
    totals["batch"] = net.batch;
    totals["gemm_count"] = wl.size();
    totals["total_ops"] = total_ops;
    report.sections["totals"] = std::move(totals);
    return emit(report, out);
}

// ---------------------------------------------------------------------------
// dse

int cmd_dse(const std::string& device_file, const std::string& network_file,
            const std::string& tr_list, const std::string& tc_list,
            const std::string& tp_list, double cap, const std::string& bmem_override,
            const DseOptions& dopt_in, int threads, const OutputOptions& out) {
    DeviceProfile dev = load_device(device_file);
    if (!bmem_override.empty()) dev.b_mem = parse_rate(bmem_override);
    validate(dev);
    const Network net = load_network(network_file);
    const std::vector<WorkloadGemm> wl = training_workload(net.layers, net.batch);

    SearchSpace space;
    space.tr_values = parse_list(tr_list, "tr");
    space.tc_values = parse_list(tc_list, "tc");
    space.tp_values = parse_list(tp_list, "tp");
    space.utilization_cap = cap;
    DseOptions dopt = dopt_in;
    dopt.utilization_cap = cap;

    const std::vector<TileConfig> cfgs = enumerate_configs(space, dev);

    Report report;
    report.command = "dse";
    report.inputs_digest = digest_files({device_file, network_file});

    std::vector<DseRecord> records = evaluate_configs(cfgs, wl, dev, dopt, threads);
    std::sort(records.begin(), records.end(), [](const DseRecord& a, const DseRecord& b) {
        if (a.avg_ppw != b.avg_ppw) return a.avg_ppw > b.avg_ppw;
        return a.cfg < b.cfg;
    });

    ordered_json rows = ordered_json::array();
    for (const DseRecord& r : records) {
        ordered_json row;
        row["tr"] = r.cfg.tr;
        row["tc"] = r.cfg.tc;
        row["tp"] = r.cfg.tp;
        row["dsp"] = r.res.dsp;
        row["bram_bits"] = r.res.bram_bits;
        row["avg_ppw"] = r.avg_ppw;
        rows.push_back(std::move(row));
    }
    report.sections["configs"] = std::move(rows);

    const auto best = best_global(records);
    ordered_json bj;
    if (best) {
        bj["tr"] = best->cfg.tr;
        bj["tc"] = best->cfg.tc;
        bj["tp"] = best->cfg.tp;
        bj["avg_ppw"] = best->avg_ppw;
    }
    report.sections["best"] = std::move(bj);

    ordered_json per_layer = ordered_json::array();
    for (const auto& [layer, choice] : best_per_layer(records)) {
        ordered_json row;
        row["layer"] = layer;
        row["tr"] = choice.cfg.tr;
        row["tc"] = choice.cfg.tc;
        row["tp"] = choice.cfg.tp;
        row["ppw"] = choice.ppw;
        per_layer.push_back(std::move(row));
    }
    report.sections["best_per_layer"] = std::move(per_layer);

    const int rc = emit(report, out);
    if (rc != kExitOk) return rc;
    if (records.empty()) {
        std::cerr << "note: no feasible configurations in the search space\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// assign

struct PpwTable {
    std::vector<std::string> order; // file order, for reporting
    std::map<std::string, double> fpga;
    std::map<std::string, double> cpu;
    std::map<std::string, i64> ops;
};

PpwTable load_ppw_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open PPW table: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("layers") || !j["layers"].is_array())
        throw ParseError(path + ": missing array field 'layers'");
    PpwTable t;
    for (const auto& lj : j["layers"]) {
        const std::string name = lj.at("name").get<std::string>();
        t.order.push_back(name);
        t.fpga[name] = lj.at("fpga_ppw").get<double>();
        t.cpu[name] = lj.at("cpu_ppw").get<double>();
        t.ops[name] = lj.at("ops").get<i64>();
    }
    if (t.order.empty()) throw ParseError(path + ": 'layers' is empty");
    return t;
}

int cmd_assign(const std::string& device_file, const std::string& table_file,
               const OutputOptions& out) {
    if (!device_file.empty()) validate(load_device(device_file)); // optional input
    const PpwTable table = load_ppw_table(table_file);

    const Assignment assignment = assign_devices(table.fpga, table.cpu, table.ops);
    const double all_fpga = aggregate_ppw(table.fpga, table.ops);
    const double all_cpu = aggregate_ppw(table.cpu, table.ops);

    Report report;
    report.command = "assign";
    std::vector<std::string> inputs;
    if (!device_file.empty()) inputs.push_back(device_file);
    inputs.push_back(table_file);
    report.inputs_digest = digest_files(inputs);

    ordered_json rows = ordered_json::array();
    for (const std::string& layer : table.order) {
        ordered_json row;
        row["layer"] = layer;
        row["fpga_ppw"] = table.fpga.at(layer);
        row["cpu_ppw"] = table.cpu.at(layer);
        row["ops"] = table.ops.at(layer);
        row["device"] = device_name(assignment.per_layer.at(layer));
        rows.push_back(std::move(row));
    }
    report.sections["layers"] = std::move(rows);

    ordered_json summary;
    summary["overall_ppw"] = assignment.overall_ppw;
    summary["all_fpga_ppw"] = all_fpga;
    summary["all_cpu_ppw"] = all_cpu;
    report.sections["summary"] = std::move(summary);
    return emit(report, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Systolic GEMM accelerator simulator, performance model and "
                 "design-space explorer"};
    app.require_subcommand(1);

    std::string kernel_choice = "auto";
    app.add_option("--kernel", kernel_choice,
                   "inner-loop backend: auto, scalar or avx2")
        ->capture_default_str();

    // model
    auto* model = app.add_subcommand("model", "per-layer latency/resource model");
    std::string m_device, m_network, m_bmem;
    i64 m_tr = 16, m_tc = 16, m_tp = 64;
    ModelOptions m_opt;
    OutputOptions m_out;
    model->add_option("--device", m_device, "device profile file")->required();
    model->add_option("--network", m_network, "network description file")->required();
    model->add_option("--tr", m_tr, "output tile rows")->capture_default_str();
    model->add_option("--tc", m_tc, "output tile cols")->capture_default_str();
    model->add_option("--tp", m_tp, "reduction tile depth")->capture_default_str();
    model->add_option("--bmem", m_bmem, "override off-chip bandwidth, e.g. 3Gbps");
    model->add_flag("--literal-datamem", m_opt.literal_data_mem,
                    "memory-traffic term with unpadded P");
    model->add_flag("--kernel-only-ppw", m_opt.kernel_only_ppw,
                    "PPW over kernel latency only");
    add_output_flags(model, m_out);

    // simulate
    auto* sim = app.add_subcommand("simulate", "cycle-level mesh simulation");
    std::string s_device;
    i64 s_r = 16, s_p = 64, s_c = 16, s_tr = 16, s_tc = 16, s_tp = 64;
    unsigned s_seed = 1;
    OutputOptions s_out;
    sim->add_option("--device", s_device, "device profile file")->required();
    sim->add_option("--r", s_r, "rows of A/C")->capture_default_str();
    sim->add_option("--p", s_p, "cols of A / rows of B")->capture_default_str();
    sim->add_option("--c", s_c, "cols of B/C")->capture_default_str();
    sim->add_option("--tr", s_tr, "output tile rows")->capture_default_str();
    sim->add_option("--tc", s_tc, "output tile cols")->capture_default_str();
    sim->add_option("--tp", s_tp, "reduction tile depth")->capture_default_str();
    sim->add_option("--seed", s_seed, "RNG seed for the integer operands")
        ->capture_default_str();
    add_output_flags(sim, s_out);

    // workload
    auto* wload = app.add_subcommand("workload", "lower a CNN into training GEMMs");
    std::string w_network;
    OutputOptions w_out;
    wload->add_option("--network", w_network, "network description file")->required();
    add_output_flags(wload, w_out);

    // dse
    auto* dse = app.add_subcommand("dse", "tile-size grid search");
    std::string d_device, d_network, d_bmem;
    std::string d_tr = "8,16,32,36,64", d_tc = "8,16,32,36,64", d_tp = "32,64,72,128";
    double d_cap = 1.0;
    int d_threads = 1;
    DseOptions d_opt;
    OutputOptions d_out;
    dse->add_option("--device", d_device, "device profile file")->required();
    dse->add_option("--network", d_network, "network description file")->required();
    dse->add_option("--tr", d_tr, "comma list of tile rows")->capture_default_str();
    dse->add_option("--tc", d_tc, "comma list of tile cols")->capture_default_str();
    dse->add_option("--tp", d_tp, "comma list of tile depths")->capture_default_str();
    dse->add_option("--cap", d_cap, "usable fraction of each resource budget")
        ->capture_default_str();
    dse->add_option("--bmem", d_bmem, "override off-chip bandwidth");
    dse->add_option("--threads", d_threads, "parallel evaluation threads")
        ->capture_default_str();
    dse->add_flag("--weighted-avg", d_opt.weighted_avg,
                  "ops-weighted layer mean instead of unweighted");
    dse->add_flag("--literal-datamem", d_opt.model.literal_data_mem,
                  "memory-traffic term with unpadded P");
    dse->add_flag("--kernel-only-ppw", d_opt.model.kernel_only_ppw,
                  "PPW over kernel latency only");
    add_output_flags(dse, d_out);

    // assign
    auto* assign = app.add_subcommand("assign", "per-layer FPGA/CPU selection");
    std::string a_device, a_table;
    OutputOptions a_out;
    assign->add_option("--device", a_device, "device profile file (optional)");
    assign->add_option("--ppw-table", a_table, "per-layer PPW table file")->required();
    add_output_flags(assign, a_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        apply_kernel_choice(kernel_choice);
        if (model->parsed())
            return cmd_model(m_device, m_network, m_tr, m_tc, m_tp, m_bmem, m_opt, m_out);
        if (sim->parsed())
            return cmd_simulate(s_device, s_r, s_p, s_c, s_tr, s_tc, s_tp, s_seed, s_out);
        if (wload->parsed()) return cmd_workload(w_network, w_out);
        if (dse->parsed())
            return cmd_dse(d_device, d_network, d_tr, d_tc, d_tp, d_cap, d_bmem, d_opt,
                           d_threads, d_out);
        if (assign->parsed()) return cmd_assign(a_device, a_table, a_out);
    } catch (const FeasibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
