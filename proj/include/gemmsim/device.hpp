// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gemmsim/perf.hpp"

namespace gemmsim {

/// Load a device profile (JSON). Rates/sizes accept unit suffixes
/// ("30Gbps", "250MHz", "75.9Mb") or bare numbers in base units;
/// cpu_tiling_bw is stored in bytes/s.
DeviceProfile load_device(const std::string& path);
DeviceProfile parse_device(const std::string& text, const std::string& origin);

} // namespace gemmsim
