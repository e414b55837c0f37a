#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icnsim/engine.hpp"

namespace icnsim {

/// A base scenario plus axes to cross: each axis is a config key with a
/// value list (`sweep.<key> = a,b,c`), plus a seed list (`seeds = 1,2,3`).
/// The run set is the axes' cross product times the seeds, enumerated in
/// file order (first axis outermost, seeds innermost).
struct SweepSpec {
  ScenarioConfig base;
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  std::vector<std::uint64_t> seeds;

  std::vector<ScenarioConfig> enumerate() const;
};

SweepSpec parse_sweep(std::string_view text,
                      const std::string& origin = "sweep");
SweepSpec load_sweep(const std::string& path);

/// Runs every config, up to `jobs` at a time. Runs share only the immutable
/// topology; the result order equals the enumeration order regardless of
/// job count.
std::vector<MetricsReport> run_sweep(const SweepSpec& spec,
                                     unsigned jobs = 1);

}  // namespace icnsim
