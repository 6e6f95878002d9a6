// SPDX-License-Identifier: Apache-2.0
#include "gemmsim/workload.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gemmsim {

const char* pass_name(Pass p) {
    switch (p) {
        case Pass::forward: return "forward";
        case Pass::backward_weights: return "backward_weights";
        case Pass::backward_inputs: return "backward_inputs";
    }
    return "?";
}

std::pair<int, int> conv_output_dims(const ConvLayerSpec& layer) {
    if (layer.in_ch < 1 || layer.out_ch < 1 || layer.kh < 1 || layer.kw < 1 ||
        layer.stride < 1 || layer.pad < 0 || layer.in_h < 1 || layer.in_w < 1)
        throw GeometryError("layer '" + layer.name + "': invalid geometry fields");
    const int oh = (layer.in_h + 2 * layer.pad - layer.kh) / layer.stride + 1;
    const int ow = (layer.in_w + 2 * layer.pad - layer.kw) / layer.stride + 1;
    if (layer.in_h + 2 * layer.pad < layer.kh || layer.in_w + 2 * layer.pad < layer.kw ||
        oh < 1 || ow < 1)
        throw GeometryError("layer '" + layer.name + "': non-positive output dims");
    return {oh, ow};
}

namespace {
WorkloadGemm make_gemm(const ConvLayerSpec& layer, Pass pass, GemmShape shape,
                       i64 batch) {
    WorkloadGemm g;
    g.layer = layer.name;
    g.pass = pass;
    g.shape = shape;
    g.invocations_per_iteration = batch;
    g.ops = 2 * shape.r * shape.p * shape.c * batch;
    return g;
}
} // namespace

WorkloadGemm forward_gemm(const ConvLayerSpec& layer, i64 batch) {
    const auto [oh, ow] = conv_output_dims(layer);
    const i64 patch = static_cast<i64>(layer.in_ch) * layer.kh * layer.kw;
    return make_gemm(layer, Pass::forward,
                     {layer.out_ch, patch, static_cast<i64>(oh) * ow}, batch);
}

WorkloadGemm backward_weight_gemm(const ConvLayerSpec& layer, i64 batch) {
    const auto [oh, ow] = conv_output_dims(layer);
    const i64 patch = static_cast<i64>(layer.in_ch) * layer.kh * layer.kw;
    return make_gemm(layer, Pass::backward_weights,
                     {layer.out_ch, static_cast<i64>(oh) * ow, patch}, batch);
}

WorkloadGemm backward_input_gemm(const ConvLayerSpec& layer, i64 batch) {
    const auto [oh, ow] = conv_output_dims(layer);
    const i64 patch = static_cast<i64>(layer.in_ch) * layer.kh * layer.kw;
    return make_gemm(layer, Pass::backward_inputs,
                     {patch, layer.out_ch, static_cast<i64>(oh) * ow}, batch);
}

std::vector<WorkloadGemm> training_workload(const std::vector<ConvLayerSpec>& network,
                                            i64 batch) {
    if (batch < 1) throw InputError("batch must be >= 1");
    std::vector<WorkloadGemm> out;
    out.reserve(network.size() * 3);
    for (const ConvLayerSpec& layer : network) {
        out.push_back(forward_gemm(layer, batch));
        out.push_back(backward_weight_gemm(layer, batch));
        if (!layer.first_layer) out.push_back(backward_input_gemm(layer, batch));
    }
    return out;
}

namespace {
using nlohmann::json;

int get_int(const json& j, const char* key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(ctx + ": missing or non-integer field '" + key + "'");
    return j[key].get<int>();
}
} // namespace

Network parse_network(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(origin + ": top level must be an object");

    Network net;
    net.name = j.value("name", "network");
    if (!j.contains("batch") || !j["batch"].is_number_integer())
        throw ParseError(origin + ": missing integer field 'batch'");
    net.batch = j["batch"].get<i64>();
    if (net.batch < 1) throw ParseError(origin + ": batch must be >= 1");
    if (!j.contains("layers") || !j["layers"].is_array())
        throw ParseError(origin + ": missing array field 'layers'");

    int idx = 0;
    for (const json& lj : j["layers"]) {
        const std::string ctx = origin + ": layers[" + std::to_string(idx) + "]";
        if (!lj.is_object()) throw ParseError(ctx + ": must be an object");
        ConvLayerSpec layer;
        if (!lj.contains("name") || !lj["name"].is_string())
            throw ParseError(ctx + ": missing string field 'name'");
        layer.name = lj["name"].get<std::string>();
        layer.in_ch = get_int(lj, "in_ch", ctx);
        layer.out_ch = get_int(lj, "out_ch", ctx);
        layer.kh = get_int(lj, "kh", ctx);
        layer.kw = get_int(lj, "kw", ctx);
        layer.stride = get_int(lj, "stride", ctx);
        layer.pad = get_int(lj, "pad", ctx);
        layer.in_h = get_int(lj, "in_h", ctx);
        layer.in_w = get_int(lj, "in_w", ctx);
        layer.first_layer = lj.value("first_layer", false);
        conv_output_dims(layer); // geometry check with layer context
        net.layers.push_back(std::move(layer));
        ++idx;
    }
    return net;
}

Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open network file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_network(ss.str(), path);
}

} // namespace gemmsim
