#include "icnsim/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <vector>

namespace icnsim {

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string opt_fixed(std::optional<double> v, int precision) {
  return v ? fixed(*v, precision) : std::string("NA");
}

}  // namespace

std::uint64_t report_config_hash(const MetricsReport& report) {
  std::string key = std::string(to_string(report.scenario)) + "|" +
                    to_string(report.strategy) + "|" +
                    to_string(report.policy) + "|" +
                    std::to_string(report.cache_bytes) + "|" +
                    std::to_string(report.scale);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string csv_row(const MetricsReport& report) {
  std::string row;
  row += to_string(report.scenario);
  row += ',';
  row += to_string(report.strategy);
  row += ',';
  row += to_string(report.policy);
  row += ',';
  row += std::to_string(report.cache_bytes);
  row += ',';
  row += std::to_string(report.scale);
  row += ',';
  row += std::to_string(report.seed);
  row += ',';
  row += opt_fixed(report.cache_hit_ratio(), 6);
  row += ',';
  row += opt_fixed(report.avg_hops(), 4);
  row += ',';
  row += opt_fixed(report.avg_delay_ms(), 4);
  row += ',';
  row += std::to_string(report.replications);
  row += ',';
  row += std::to_string(report.events_processed);
  return row;
}

std::size_t emit_csv(std::span<const MetricsReport> reports,
                     std::ostream& out) {
  std::vector<std::size_t> order(reports.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const auto ha = report_config_hash(reports[a]);
                     const auto hb = report_config_hash(reports[b]);
                     if (ha != hb) return ha < hb;
                     return reports[a].seed < reports[b].seed;
                   });
  out << kCsvHeader << "\n";
  for (std::size_t idx : order) out << csv_row(reports[idx]) << "\n";
  return reports.size();
}

std::size_t emit_csv_file(std::span<const MetricsReport> reports,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write CSV file: " + path);
  return emit_csv(reports, out);
}

}  // namespace icnsim
