#include "icnsim/sweep.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "icnsim/config.hpp"

namespace icnsim {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return "";
  auto end = s.find_last_not_of(ws);
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = trim(text.substr(pos, comma - pos));
    if (!item.empty()) out.push_back(item);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<ScenarioConfig> SweepSpec::enumerate() const {
  std::vector<ScenarioConfig> configs{base};
  for (const auto& [key, values] : axes) {
    std::vector<ScenarioConfig> expanded;
    expanded.reserve(configs.size() * values.size());
    for (const ScenarioConfig& config : configs) {
      for (const std::string& value : values) {
        ScenarioConfig next = config;
        apply_config_key(next, key, value, "sweep axis");
        expanded.push_back(next);
      }
    }
    configs = std::move(expanded);
  }
  if (!seeds.empty()) {
    std::vector<ScenarioConfig> seeded;
    seeded.reserve(configs.size() * seeds.size());
    for (const ScenarioConfig& config : configs) {
      for (std::uint64_t seed : seeds) {
        ScenarioConfig next = config;
        next.seed = seed;
        seeded.push_back(next);
      }
    }
    configs = std::move(seeded);
  }
  return configs;
}

SweepSpec parse_sweep(std::string_view text, const std::string& origin) {
  SweepSpec spec;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ": line " + std::to_string(line_no) +
                        ": expected key=value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const std::string where = origin + ":" + std::to_string(line_no);
    if (key.rfind("sweep.", 0) == 0) {
      const std::string axis_key = key.substr(6);
      auto values = split_list(value);
      if (values.empty())
        throw ConfigError(where + ": empty sweep value list");
      // Validate values eagerly so bad axes fail at parse time.
      for (const std::string& v : values) {
        ScenarioConfig probe = spec.base;
        apply_config_key(probe, axis_key, v, where);
      }
      spec.axes.emplace_back(axis_key, std::move(values));
    } else if (key == "seeds") {
      for (const std::string& item : split_list(value))
        spec.seeds.push_back(parse_size_value(item, where));
      if (spec.seeds.empty())
        throw ConfigError(where + ": empty seed list");
    } else {
      apply_config_key(spec.base, key, value, where);
    }
  }
  return spec;
}

SweepSpec load_sweep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sweep file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep(buf.str(), path);
}

std::vector<MetricsReport> run_sweep(const SweepSpec& spec, unsigned jobs) {
  const std::vector<ScenarioConfig> configs = spec.enumerate();
  std::vector<MetricsReport> reports(configs.size());
  if (configs.empty()) return reports;
  if (spec.base.topology_path.empty())
    throw ConfigError("sweep base config has no topology path");
  const Topology topo = Topology::from_file(spec.base.topology_path);

  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      try {
        reports[i] = configs[i].topology_path == spec.base.topology_path
                         ? run(configs[i], topo)
                         : run(configs[i]);
      } catch (...) {
        std::scoped_lock lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace icnsim
