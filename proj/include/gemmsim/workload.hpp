// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gemmsim/types.hpp"

namespace gemmsim {

/// One CONV layer with explicit input spatial dims (no shape propagation, so
/// pooling between layers is captured by the stated in_h/in_w).
struct ConvLayerSpec {
    std::string name;
    int in_ch = 1;
    int out_ch = 1;
    int kh = 1;
    int kw = 1;
    int stride = 1;
    int pad = 0;
    int in_h = 1;
    int in_w = 1;
    bool first_layer = false;
};

enum class Pass { forward, backward_weights, backward_inputs };

const char* pass_name(Pass p);

/// One GEMM of the training loop, annotated with how often it runs per
/// iteration and how many ops it contributes.
struct WorkloadGemm {
    std::string layer;
    Pass pass = Pass::forward;
    GemmShape shape;
    i64 invocations_per_iteration = 1;
    i64 ops = 0; // 2*R*P*C * invocations
};

/// floor((in + 2*pad - k)/stride) + 1 per spatial dim; throws GeometryError
/// if either output dim is < 1.
std::pair<int, int> conv_output_dims(const ConvLayerSpec& layer);

// Per-layer training GEMMs. Forward multiplies the weight matrix by the
// patch matrix; the weight-gradient GEMM multiplies the output gradient by
// the transposed patches; the input-gradient GEMM multiplies the transposed
// weights by the output gradient. Each runs once per batch element.
WorkloadGemm forward_gemm(const ConvLayerSpec& layer, i64 batch);
WorkloadGemm backward_weight_gemm(const ConvLayerSpec& layer, i64 batch);
WorkloadGemm backward_input_gemm(const ConvLayerSpec& layer, i64 batch);

/// All GEMMs of one training iteration, layer order preserved; the
/// input-gradient GEMM is skipped for layers flagged first_layer.
std::vector<WorkloadGemm> training_workload(const std::vector<ConvLayerSpec>& network,
                                            i64 batch);

struct Network {
    std::string name;
    i64 batch = 1;
    std::vector<ConvLayerSpec> layers;
};

/// Load a network description (JSON: top-level batch + layers array).
Network load_network(const std::string& path);
Network parse_network(const std::string& text, const std::string& origin);

} // namespace gemmsim
