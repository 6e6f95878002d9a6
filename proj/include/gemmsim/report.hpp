// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gemmsim {

constexpr const char* kToolVersion = "0.1.0";

/// Machine-readable command output. Deterministic for identical inputs:
/// no timestamps, fixed field order, content-hashed inputs.
struct Report {
    std::string tool_version = kToolVersion;
    std::string command;
    std::string inputs_digest;
    // Named sections; each is either an array of flat row objects or a flat
    // object of scalars.
    nlohmann::ordered_json sections = nlohmann::ordered_json::object();
};

/// FNV-1a 64-bit over the concatenated file contents, hex-encoded.
std::string digest_files(const std::vector<std::string>& paths);
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ull);

std::string to_json_text(const Report& r);
std::string to_csv_text(const Report& r);
std::string to_table_text(const Report& r);

} // namespace gemmsim
