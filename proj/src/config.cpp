#include "icnsim/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace icnsim {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r";
  auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return "";
  auto end = s.find_last_not_of(ws);
  return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ConfigError(origin + ": " + what);
}

double parse_double(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(context + ": not a number: `" + text + "`");
  }
}

}  // namespace

std::uint64_t parse_size_value(const std::string& text,
                               const std::string& context) {
  std::string body = text;
  std::uint64_t multiplier = 1;
  if (body.size() >= 2) {
    std::string suffix = body.substr(body.size() - 2);
    for (char& c : suffix) c = static_cast<char>(std::toupper(c));
    if (suffix == "KB") multiplier = 1ULL << 10;
    else if (suffix == "MB") multiplier = 1ULL << 20;
    else if (suffix == "GB") multiplier = 1ULL << 30;
    else if (suffix == "TB") multiplier = 1ULL << 40;
    if (multiplier != 1) body = trim(body.substr(0, body.size() - 2));
  }
  // Plain integer first; fall back to e-notation (1e12).
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(),
                                   value);
  if (ec == std::errc() && ptr == body.data() + body.size())
    return value * multiplier;
  const double as_double = parse_double(body, context);
  if (as_double < 0.0 || as_double > 1.8e19 ||
      std::floor(as_double) != as_double)
    throw ConfigError(context + ": not a non-negative integer: `" + text +
                      "`");
  return static_cast<std::uint64_t>(as_double) * multiplier;
}

namespace {

std::string format_size(std::uint64_t bytes) {
  struct Unit {
    std::uint64_t factor;
    const char* suffix;
  };
  constexpr Unit units[] = {{1ULL << 40, "TB"},
                            {1ULL << 30, "GB"},
                            {1ULL << 20, "MB"},
                            {1ULL << 10, "KB"}};
  for (const Unit& u : units) {
    if (bytes >= u.factor && bytes % u.factor == 0)
      return std::to_string(bytes / u.factor) + u.suffix;
  }
  return std::to_string(bytes);
}

std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

void apply_config_key(ScenarioConfig& config, const std::string& key,
                      const std::string& value, const std::string& origin) {
  const std::string ctx = origin + ": key `" + key + "`";
  if (key == "scenario") {
    auto parsed = parse_scenario(value);
    if (!parsed) fail(origin, "unknown scenario `" + value + "`");
    config.scenario = *parsed;
  } else if (key == "catalog") {
    config.catalog = parse_size_value(value, ctx);
  } else if (key == "avg_filesize") {
    config.avg_filesize = parse_size_value(value, ctx);
  } else if (key == "chunk_size") {
    config.chunk_size = parse_size_value(value, ctx);
  } else if (key == "alpha") {
    config.alpha = parse_double(value, ctx);
  } else if (key == "beta") {
    config.beta = parse_double(value, ctx);
  } else if (key == "cache_bytes") {
    config.cache_bytes = parse_size_value(value, ctx);
  } else if (key == "topology") {
    config.topology_path = value;
  } else if (key == "duration") {
    config.duration_s = parse_double(value, ctx);
  } else if (key == "request_rate") {
    config.request_rate = parse_double(value, ctx);
  } else if (key == "strategy") {
    auto parsed = parse_strategy(value);
    if (!parsed) fail(origin, "unknown strategy `" + value + "`");
    config.strategy.kind = *parsed;
  } else if (key == "policy") {
    auto parsed = parse_policy(value);
    if (!parsed) fail(origin, "unknown replacement policy `" + value + "`");
    config.policy = *parsed;
  } else if (key == "seed") {
    config.seed = parse_size_value(value, ctx);
  } else if (key == "scale") {
    config.scale = parse_size_value(value, ctx);
    if (config.scale == 0) fail(origin, "scale must be >= 1");
  } else if (key == "cache_scale") {
    config.cache_scale = parse_size_value(value, ctx);
  } else if (key == "filesize_scale") {
    config.filesize_scale = parse_size_value(value, ctx);
    if (config.filesize_scale == 0) fail(origin, "filesize_scale must be >= 1");
  } else if (key == "probcache_ttw") {
    config.strategy.probcache_ttw = parse_double(value, ctx);
  } else if (key == "mpc_threshold") {
    config.strategy.mpc_threshold =
        static_cast<std::uint32_t>(parse_size_value(value, ctx));
  } else if (key == "warmup") {
    config.warmup_fraction = parse_double(value, ctx);
  } else if (key == "producer") {
    config.producer = value == "auto"
                          ? kNoNode
                          : static_cast<NodeId>(parse_size_value(value, ctx));
  } else if (key == "popularity_capacity") {
    config.popularity_capacity = parse_size_value(value, ctx);
  } else if (key == "name_cache_capacity") {
    config.name_cache_capacity =
        value == "auto" ? 0 : parse_size_value(value, ctx);
  } else if (key == "pit_timeout_ms") {
    config.pit_timeout_ms = value == "auto" ? 0.0 : parse_double(value, ctx);
  } else {
    fail(origin, "unknown key `" + key + "`");
  }
}

ScenarioConfig parse_config(std::string_view text, const std::string& origin) {
  ScenarioConfig config;
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
      fail(origin, "line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      fail(origin, "line " + std::to_string(line_no) + ": empty key or value");
    apply_config_key(config, key, value,
                     origin + ":" + std::to_string(line_no));
  }
  return config;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string emit_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "scenario = " << to_string(config.scenario) << "\n"
      << "catalog = " << config.catalog << "\n"
      << "avg_filesize = " << format_size(config.avg_filesize) << "\n"
      << "chunk_size = " << format_size(config.chunk_size) << "\n"
      << "alpha = " << format_double(config.alpha) << "\n"
      << "beta = " << format_double(config.beta) << "\n"
      << "cache_bytes = " << format_size(config.cache_bytes) << "\n"
      << "topology = " << config.topology_path << "\n"
      << "duration = " << format_double(config.duration_s) << "\n"
      << "request_rate = " << format_double(config.request_rate) << "\n"
      << "strategy = " << to_string(config.strategy.kind) << "\n"
      << "policy = " << to_string(config.policy) << "\n"
      << "seed = " << config.seed << "\n"
      << "scale = " << config.scale << "\n"
      << "cache_scale = " << config.cache_scale << "\n"
      << "filesize_scale = " << config.filesize_scale << "\n"
      << "probcache_ttw = " << format_double(config.strategy.probcache_ttw)
      << "\n"
      << "mpc_threshold = " << config.strategy.mpc_threshold << "\n"
      << "warmup = " << format_double(config.warmup_fraction) << "\n"
      << "producer = "
      << (config.producer == kNoNode ? std::string("auto")
                                     : std::to_string(config.producer))
      << "\n"
      << "popularity_capacity = " << config.popularity_capacity << "\n"
      << "name_cache_capacity = "
      << (config.name_cache_capacity == 0
              ? std::string("auto")
              : std::to_string(config.name_cache_capacity))
      << "\n"
      << "pit_timeout_ms = "
      << (config.pit_timeout_ms == 0.0 ? std::string("auto")
                                       : format_double(config.pit_timeout_ms))
      << "\n";
  return out.str();
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
  return a.scenario == b.scenario && a.catalog == b.catalog &&
         a.avg_filesize == b.avg_filesize && a.chunk_size == b.chunk_size &&
         a.alpha == b.alpha && a.beta == b.beta &&
         a.cache_bytes == b.cache_bytes &&
         a.topology_path == b.topology_path && a.duration_s == b.duration_s &&
         a.request_rate == b.request_rate &&
         a.strategy.kind == b.strategy.kind &&
         a.strategy.probcache_ttw == b.strategy.probcache_ttw &&
         a.strategy.mpc_threshold == b.strategy.mpc_threshold &&
         a.policy == b.policy && a.seed == b.seed && a.scale == b.scale &&
         a.cache_scale == b.cache_scale &&
         a.filesize_scale == b.filesize_scale &&
         a.warmup_fraction == b.warmup_fraction && a.producer == b.producer &&
         a.popularity_capacity == b.popularity_capacity &&
         a.name_cache_capacity == b.name_cache_capacity &&
         a.pit_timeout_ms == b.pit_timeout_ms;
}

std::vector<std::pair<std::string, ScenarioConfig>> preset_configs(
    const std::string& topology_path) {
  // Published rows stay verbatim; the desk divisors keep every preset at a
  // 1e5-object catalog and a few seconds of wall time.
  ScenarioConfig isp;
  isp.scenario = ScenarioName::Isp;
  isp.catalog = 1'000'000'000'000ULL;
  isp.avg_filesize = 10ULL << 10;
  isp.alpha = 0.65;
  isp.scale = 10'000'000;
  isp.cache_scale = 262'144;
  isp.filesize_scale = 1;
  isp.request_rate = 0.2;
  isp.topology_path = topology_path;

  ScenarioConfig vod;
  vod.scenario = ScenarioName::Vod;
  vod.catalog = 1'000'000'000ULL;
  vod.avg_filesize = 100ULL << 20;
  vod.alpha = 0.75;
  vod.scale = 10'000;
  vod.cache_scale = 32'768;
  vod.filesize_scale = 256;
  vod.request_rate = 0.01;
  vod.topology_path = topology_path;

  ScenarioConfig osn;
  osn.scenario = ScenarioName::Osn;
  osn.catalog = 100'000'000ULL;
  osn.avg_filesize = 10ULL << 20;
  osn.alpha = 1.14;
  osn.scale = 1'000;
  osn.cache_scale = 4'096;
  osn.filesize_scale = 256;
  osn.request_rate = 0.05;
  osn.topology_path = topology_path;

  std::vector<std::pair<std::string, ScenarioConfig>> out;
  auto add = [&out](std::string name, ScenarioConfig base,
                    std::uint64_t cache_bytes) {
    base.cache_bytes = cache_bytes;
    out.emplace_back(std::move(name), base);
  };
  add("isp_100gb", isp, 100ULL << 30);
  add("isp_1tb", isp, 1ULL << 40);
  add("vod_25gb", vod, 25ULL << 30);
  add("vod_250gb", vod, 250ULL << 30);
  add("osn_10gb", osn, 10ULL << 30);
  add("osn_100gb", osn, 100ULL << 30);
  return out;
}

}  // namespace icnsim
