#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icnsim/engine.hpp"

namespace icnsim {

/// Parses the flat `key = value` scenario format (`#` comments, blank
/// lines allowed). Unknown keys are errors. Byte sizes accept binary
/// KB/MB/GB/TB suffixes; counts accept integer e-notation (1e12).
ScenarioConfig parse_config(std::string_view text,
                            const std::string& origin = "config");
ScenarioConfig load_config(const std::string& path);

/// Applies one key=value pair; shared by the parser and sweep overrides.
void apply_config_key(ScenarioConfig& config, const std::string& key,
                      const std::string& value, const std::string& origin);

/// Canonical serialization; parse(emit(c)) == c.
std::string emit_config(const ScenarioConfig& config);

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

/// The three published scenarios, one config per cache size, desk-scale
/// divisors included. Names: isp_100gb, isp_1tb, vod_25gb, vod_250gb,
/// osn_10gb, osn_100gb.
std::vector<std::pair<std::string, ScenarioConfig>> preset_configs(
    const std::string& topology_path = "data/abilene.topo");

std::uint64_t parse_size_value(const std::string& text,
                               const std::string& context);

}  // namespace icnsim
