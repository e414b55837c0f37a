#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icnsim/config.hpp"
#include "icnsim/csv.hpp"
#include "icnsim/engine.hpp"
#include "icnsim/sweep.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("ICB_SEED");
  if (!raw || !*raw) return std::nullopt;
  try {
    return icnsim::parse_size_value(raw, "ICB_SEED");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void resolve_seed(icnsim::ScenarioConfig& config, bool seed_from_file,
                  std::optional<std::uint64_t> seed_flag) {
  if (seed_flag) {
    config.seed = *seed_flag;
  } else if (!seed_from_file) {
    if (auto fallback = env_seed()) config.seed = *fallback;
  }
}

bool file_sets_seed(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key == "seed") return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"icnsim - CCN cache-network simulator"};
  app.require_subcommand(1);

  // run
  std::string run_config_path;
  std::optional<std::uint64_t> run_seed;
  std::optional<std::uint64_t> run_scale;
  std::string run_out;
  auto* run_cmd = app.add_subcommand("run", "run one scenario config");
  run_cmd->add_option("--config", run_config_path, "scenario config file")
      ->required();
  run_cmd->add_option("--seed", run_seed, "override the run seed");
  run_cmd->add_option("--scale", run_scale, "override the catalog scale");
  run_cmd->add_option("--out", run_out, "CSV output path");

  // sweep
  std::string sweep_config_path;
  unsigned sweep_jobs = 1;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep spec");
  sweep_cmd->add_option("--config", sweep_config_path, "sweep spec file")
      ->required();
  sweep_cmd->add_option("--jobs", sweep_jobs, "concurrent runs")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep_out, "CSV output path");

  // presets
  std::string presets_out = ".";
  auto* presets_cmd =
      app.add_subcommand("presets", "write the six published scenario files");
  presets_cmd->add_option("--out", presets_out, "output directory");

  // savings
  double volume_tb = 0.0;
  double ratio = 0.0;
  auto* savings_cmd = app.add_subcommand(
      "savings", "daily traffic saved for a volume and hit ratio");
  savings_cmd->add_option("--volume-tb", volume_tb, "daily volume, decimal TB")
      ->required();
  savings_cmd->add_option("--ratio", ratio, "cache hit ratio in [0,1]")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      icnsim::ScenarioConfig config = icnsim::load_config(run_config_path);
      resolve_seed(config, file_sets_seed(run_config_path), run_seed);
      if (run_scale) config.scale = *run_scale;
      const icnsim::MetricsReport report = icnsim::run(config);
      std::cout << report.summary();
      if (!run_out.empty()) {
        const icnsim::MetricsReport reports[] = {report};
        icnsim::emit_csv_file(reports, run_out);
        std::cout << "wrote " << run_out << "\n";
      }
      return 0;
    }
    if (*sweep_cmd) {
      icnsim::SweepSpec spec = icnsim::load_sweep(sweep_config_path);
      const auto reports = icnsim::run_sweep(spec, sweep_jobs);
      if (sweep_out.empty()) {
        icnsim::emit_csv(reports, std::cout);
      } else {
        icnsim::emit_csv_file(reports, sweep_out);
        std::cout << "wrote " << reports.size() << " rows to " << sweep_out
                  << "\n";
      }
      return 0;
    }
    if (*presets_cmd) {
      std::filesystem::create_directories(presets_out);
      for (const auto& [name, config] : icnsim::preset_configs()) {
        const auto path =
            std::filesystem::path(presets_out) / (name + ".cfg");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw icnsim::ConfigError("cannot write " + path.string());
        out << "# icnsim preset: " << name << "\n"
            << "# Published row plus desk-scale divisors (scale /"
            << " cache_scale / filesize_scale).\n"
            << icnsim::emit_config(config);
        std::cout << path.string() << "\n";
      }
      return 0;
    }
    if (*savings_cmd) {
      const double saved = icnsim::traffic_savings_tb(volume_tb, ratio);
      std::printf("%.1f TB/day\n", saved);
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
