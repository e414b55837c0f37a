#include <sstream>

#include "doctest.h"
#include "icnsim/config.hpp"
#include "icnsim/csv.hpp"
#include "icnsim/sweep.hpp"

using namespace icnsim;

TEST_CASE("size values: binary suffixes and e-notation") {
  CHECK(parse_size_value("4KB", "t") == 4096);
  CHECK(parse_size_value("100GB", "t") == 100ULL << 30);
  CHECK(parse_size_value("1TB", "t") == 1ULL << 40);
  CHECK(parse_size_value("1e12", "t") == 1'000'000'000'000ULL);
  CHECK(parse_size_value("12345", "t") == 12345);
  CHECK_THROWS_AS(parse_size_value("abc", "t"), ConfigError);
  CHECK_THROWS_AS(parse_size_value("-5", "t"), ConfigError);
  CHECK_THROWS_AS(parse_size_value("1.5", "t"), ConfigError);
}

TEST_CASE("config: parse errors name the offending line or key") {
  CHECK_THROWS_WITH_AS(parse_config("bogus_key = 1\n", "f"),
                       doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("strategy = nope\n", "f"),
                       doctest::Contains("unknown strategy"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("alpha\n", "f"),
                       doctest::Contains("key=value"), ConfigError);
  CHECK_THROWS_AS(parse_config("catalog =\n", "f"), ConfigError);
}

TEST_CASE("config: comments, whitespace, and every key") {
  const ScenarioConfig config = parse_config(
      "# full config\n"
      "scenario = vod\n"
      "catalog = 1e9\n"
      "avg_filesize = 100MB\n"
      "chunk_size = 4KB\n"
      "alpha = 0.75\n"
      "beta = 0\n"
      "cache_bytes = 25GB   # the small option\n"
      "topology = data/abilene.topo\n"
      "duration = 86400\n"
      "request_rate = 0.01\n"
      "strategy = probcache\n"
      "probcache_ttw = 8\n"
      "policy = lfu\n"
      "seed = 9\n"
      "scale = 10000\n"
      "cache_scale = 32768\n"
      "filesize_scale = 256\n"
      "mpc_threshold = 5\n"
      "warmup = 0.2\n"
      "producer = 3\n"
      "popularity_capacity = 1024\n"
      "pit_timeout_ms = auto\n");
  CHECK(config.scenario == ScenarioName::Vod);
  CHECK(config.catalog == 1'000'000'000ULL);
  CHECK(config.avg_filesize == 100ULL << 20);
  CHECK(config.strategy.kind == StrategyKind::ProbCache);
  CHECK(config.strategy.probcache_ttw == 8.0);
  CHECK(config.policy == ReplacementPolicy::Lfu);
  CHECK(config.producer == 3);
  CHECK(config.pit_timeout_ms == 0.0);
  CHECK(config.cache_capacity_chunks() == 200);
}

TEST_CASE("presets: six published configurations") {
  const auto presets = preset_configs();
  REQUIRE(presets.size() == 6);
  CHECK(presets[0].first == "isp_100gb");
  CHECK(presets[1].first == "isp_1tb");
  CHECK(presets[2].first == "vod_25gb");
  CHECK(presets[3].first == "vod_250gb");
  CHECK(presets[4].first == "osn_10gb");
  CHECK(presets[5].first == "osn_100gb");

  // Published rows, verbatim, before scaling.
  for (const auto& [name, config] : presets) {
    CHECK(config.chunk_size == 4096);
    CHECK(config.duration_s == 86400.0);
    CHECK(config.beta == 0.0);
  }
  const auto& isp = presets[0].second;
  CHECK(isp.catalog == 1'000'000'000'000ULL);
  CHECK(isp.avg_filesize == 10ULL << 10);
  CHECK(isp.alpha == 0.65);
  CHECK(isp.cache_bytes == 100ULL << 30);
  CHECK(presets[1].second.cache_bytes == 1ULL << 40);
  const auto& vod = presets[2].second;
  CHECK(vod.catalog == 1'000'000'000ULL);
  CHECK(vod.avg_filesize == 100ULL << 20);
  CHECK(vod.alpha == 0.75);
  CHECK(vod.cache_bytes == 25ULL << 30);
  CHECK(presets[3].second.cache_bytes == 250ULL << 30);
  const auto& osn = presets[4].second;
  CHECK(osn.catalog == 100'000'000ULL);
  CHECK(osn.avg_filesize == 10ULL << 20);
  CHECK(osn.alpha == 1.14);
  CHECK(osn.cache_bytes == 10ULL << 30);
  CHECK(presets[5].second.cache_bytes == 100ULL << 30);

  // Desk scaling keeps catalogs at 1e5 objects.
  for (const auto& [name, config] : presets)
    CHECK(config.effective_catalog() == 100'000);
}

TEST_CASE("presets: emit/parse round-trip is the identity") {
  for (const auto& [name, config] : preset_configs()) {
    const ScenarioConfig reparsed = parse_config(emit_config(config), name);
    CHECK(reparsed == config);
  }
}

TEST_CASE("csv: empty report list yields a header-only file") {
  std::ostringstream out;
  const std::vector<MetricsReport> none;
  CHECK(emit_csv(none, out) == 0);
  CHECK(out.str() == std::string(kCsvHeader) + "\n");
}

TEST_CASE("csv: rows keyed by config, ordered by seed, rerun-stable") {
  MetricsReport a;
  a.scenario = ScenarioName::Isp;
  a.strategy = StrategyKind::TwoLru;
  a.cache_bytes = 100ULL << 30;
  a.scale = 10'000'000;
  a.seed = 2;
  a.cache_hits = 250;
  a.cache_misses = 750;
  a.delivered_chunks = 1000;
  a.sum_hops = 2000.0;
  a.sum_delay_ms = 52'500.0;
  MetricsReport b = a;
  b.seed = 1;

  std::ostringstream first;
  const MetricsReport run_set[] = {a, b};
  CHECK(emit_csv(run_set, first) == 2);
  std::ostringstream second;
  emit_csv(run_set, second);
  CHECK(first.str() == second.str());

  std::istringstream lines(first.str());
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  CHECK(header == kCsvHeader);
  // same config columns, seeds ascending
  CHECK(row1 ==
        "isp,2lru,lru,107374182400,10000000,1,0.250000,2.0000,52.5000,0,0");
  CHECK(row2 ==
        "isp,2lru,lru,107374182400,10000000,2,0.250000,2.0000,52.5000,0,0");
}

TEST_CASE("csv: undefined metrics print as NA") {
  MetricsReport empty;
  empty.seed = 5;
  const std::string row = csv_row(empty);
  CHECK(row == "custom,lce,lru,0,1,5,NA,NA,NA,0,0");
}

TEST_CASE("sweep: parse, cross product, and deterministic order") {
  const SweepSpec spec = parse_sweep(
      "catalog = 1000\n"
      "avg_filesize = 4KB\n"
      "cache_bytes = 64KB\n"
      "duration = 50\n"
      "request_rate = 1\n"
      "topology = ignored\n"
      "sweep.strategy = lce,lcd\n"
      "sweep.cache_bytes = 64KB,128KB\n"
      "seeds = 1,2,3\n");
  const auto configs = spec.enumerate();
  REQUIRE(configs.size() == 2 * 2 * 3);
  CHECK(configs[0].strategy.kind == StrategyKind::Lce);
  CHECK(configs[0].cache_bytes == 64ULL << 10);
  CHECK(configs[0].seed == 1);
  CHECK(configs[1].seed == 2);
  CHECK(configs[3].cache_bytes == 128ULL << 10);
  CHECK(configs[6].strategy.kind == StrategyKind::Lcd);
  CHECK(configs.back().seed == 3);
}

TEST_CASE("sweep: bad axis values fail at parse time") {
  CHECK_THROWS_AS(parse_sweep("sweep.strategy = lce,bogus\n"), ConfigError);
  CHECK_THROWS_AS(parse_sweep("seeds = \n"), ConfigError);
}
