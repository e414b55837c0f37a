#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icnsim/ccn_node.hpp"
#include "icnsim/content_store.hpp"
#include "icnsim/strategies.hpp"
#include "icnsim/topology.hpp"

namespace icnsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioName : std::uint8_t { Isp, Vod, Osn, Custom };

const char* to_string(ScenarioName name);
std::optional<ScenarioName> parse_scenario(const std::string& text);

/// One run's parameters. Preset rows carry their published values verbatim;
/// the desk-scale divisors (scale, cache_scale, filesize_scale) are applied
/// at engine init.
struct ScenarioConfig {
  ScenarioName scenario = ScenarioName::Custom;
  std::uint64_t catalog = 0;         // objects, before scaling
  std::uint64_t avg_filesize = 0;    // bytes, before scaling
  std::uint64_t chunk_size = 4096;   // bytes
  double alpha = 0.65;
  double beta = 0.0;
  std::uint64_t cache_bytes = 0;     // per node, before scaling
  std::string topology_path;
  double duration_s = 86400.0;
  double request_rate = 1.0;         // per client per second
  CachingStrategy strategy;
  ReplacementPolicy policy = ReplacementPolicy::Lru;
  std::uint64_t seed = 1;
  std::uint64_t scale = 1;           // divides catalog
  std::uint64_t cache_scale = 0;     // divides cache_bytes; 0 = follow scale
  std::uint64_t filesize_scale = 1;  // divides avg_filesize
  double warmup_fraction = 0.1;      // leading sim-time excluded from metrics
  NodeId producer = kNoNode;         // kNoNode = auto placement
  std::uint64_t popularity_capacity = 65536;
  std::uint64_t name_cache_capacity = 0;  // 2-LRU; 0 = follow CS capacity
  double pit_timeout_ms = 0.0;       // 0 = auto: 4 x max path delay

  std::uint64_t effective_catalog() const;
  std::uint64_t effective_cache_bytes() const;
  std::uint64_t effective_filesize() const;
  std::uint64_t cache_capacity_chunks() const;
};

struct NodeMetrics {
  std::uint64_t cache_hits = 0;    // chunks served from this node's CS
  std::uint64_t cache_misses = 0;  // producer deliveries for clients here
  std::uint64_t cs_lookup_hits = 0;
  std::uint64_t cs_lookup_misses = 0;
  std::uint64_t cs_entries_end = 0;  // CS occupancy at quiescence
};

struct MetricsReport {
  // Identity columns.
  ScenarioName scenario = ScenarioName::Custom;
  StrategyKind strategy = StrategyKind::Lce;
  ReplacementPolicy policy = ReplacementPolicy::Lru;
  std::uint64_t cache_bytes = 0;
  std::uint64_t scale = 1;
  std::uint64_t seed = 0;

  // Measured window (post-warmup). Every chunk interest is classified
  // exactly once: a cache hit at its serving node, or a producer delivery
  // (the miss, attributed to the requester's attachment node).
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t producer_hits = 0;
  std::uint64_t chunk_interests = 0;
  std::uint64_t delivered_chunks = 0;
  double sum_hops = 0.0;
  double sum_delay_ms = 0.0;
  std::uint32_t max_hops = 0;

  // Whole-run counters.
  std::uint64_t replications = 0;
  std::uint64_t opportunistic_insertions = 0;
  std::uint64_t events_processed = 0;
  std::uint64_t request_events = 0;
  std::uint64_t objects_completed = 0;
  std::uint64_t unsolicited_data = 0;
  std::uint64_t total_chunk_interests = 0;
  std::uint64_t total_cache_hits = 0;
  std::uint64_t total_producer_hits = 0;
  double max_pit_residency_ms = 0.0;
  double pit_timeout_ms = 0.0;
  NodeId producer = kNoNode;

  std::vector<NodeMetrics> per_node;

  std::optional<double> cache_hit_ratio() const;
  std::optional<double> avg_hops() const;
  std::optional<double> avg_delay_ms() const;
  std::string summary() const;
};

/// hits / (hits + misses); undefined (not 0) on an empty denominator.
std::optional<double> cache_hit_ratio(std::uint64_t hits,
                                      std::uint64_t misses);

/// Daily traffic absorbed by the caches, decimal terabytes, rounded to one
/// decimal. Decimal units on purpose: the published savings figures only
/// reconcile with decimal petabytes.
double traffic_savings_tb(double daily_volume_tb, double hit_ratio);

/// Executes the scenario: every generated object request walks its chunks
/// sequentially through the CS/PIT/FIB pipeline, in timestamp order with
/// sequence-number tie-breaks. Deterministic given (config, topology).
MetricsReport run(const ScenarioConfig& config, const Topology& topo);

/// Loads config.topology_path and runs.
MetricsReport run(const ScenarioConfig& config);

struct RequestEvent;

/// Same engine, but over an explicit request stream instead of a generated
/// workload (exact walkthrough traces, custom client placements).
MetricsReport run_with_requests(const ScenarioConfig& config,
                                const Topology& topo,
                                const std::vector<RequestEvent>& requests);

}  // namespace icnsim
