#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "icnsim/engine.hpp"

namespace icnsim {

inline constexpr const char* kCsvHeader =
    "scenario,strategy,policy,cache_bytes,scale,seed,cache_hit_ratio,"
    "avg_hops,avg_delay_ms,replications,events";

/// One CSV row per report, header first. Rows are sorted by (config hash,
/// seed) so reruns of the same experiment set are byte-identical.
/// Undefined ratios print as NA. Returns the row count.
std::size_t emit_csv(std::span<const MetricsReport> reports,
                     std::ostream& out);
std::size_t emit_csv_file(std::span<const MetricsReport> reports,
                          const std::string& path);

std::string csv_row(const MetricsReport& report);

/// FNV-1a over the identity columns (everything but the seed).
std::uint64_t report_config_hash(const MetricsReport& report);

}  // namespace icnsim
