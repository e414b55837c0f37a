#include "icnsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "icnsim/workload.hpp"

namespace icnsim {

const char* to_string(ScenarioName name) {
  switch (name) {
    case ScenarioName::Isp: return "isp";
    case ScenarioName::Vod: return "vod";
    case ScenarioName::Osn: return "osn";
    case ScenarioName::Custom: return "custom";
  }
  return "?";
}

std::optional<ScenarioName> parse_scenario(const std::string& text) {
  if (text == "isp") return ScenarioName::Isp;
  if (text == "vod") return ScenarioName::Vod;
  if (text == "osn") return ScenarioName::Osn;
  if (text == "custom") return ScenarioName::Custom;
  return std::nullopt;
}

std::uint64_t ScenarioConfig::effective_catalog() const {
  return std::max<std::uint64_t>(1, catalog / std::max<std::uint64_t>(1, scale));
}

std::uint64_t ScenarioConfig::effective_cache_bytes() const {
  const std::uint64_t divisor =
      std::max<std::uint64_t>(1, cache_scale == 0 ? scale : cache_scale);
  return cache_bytes / divisor;
}

std::uint64_t ScenarioConfig::effective_filesize() const {
  return std::max<std::uint64_t>(
      1, avg_filesize / std::max<std::uint64_t>(1, filesize_scale));
}

std::uint64_t ScenarioConfig::cache_capacity_chunks() const {
  return effective_cache_bytes() / chunk_size;
}

std::optional<double> cache_hit_ratio(std::uint64_t hits,
                                      std::uint64_t misses) {
  if (hits + misses == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(hits + misses);
}

double traffic_savings_tb(double daily_volume_tb, double hit_ratio) {
  if (daily_volume_tb < 0.0)
    throw ConfigError("traffic_savings: negative volume");
  if (hit_ratio < 0.0 || hit_ratio > 1.0)
    throw ConfigError("traffic_savings: ratio outside [0,1]");
  return std::round(daily_volume_tb * hit_ratio * 10.0) / 10.0;
}

std::optional<double> MetricsReport::cache_hit_ratio() const {
  return icnsim::cache_hit_ratio(cache_hits, cache_misses);
}

std::optional<double> MetricsReport::avg_hops() const {
  if (delivered_chunks == 0) return std::nullopt;
  return sum_hops / static_cast<double>(delivered_chunks);
}

std::optional<double> MetricsReport::avg_delay_ms() const {
  if (delivered_chunks == 0) return std::nullopt;
  return sum_delay_ms / static_cast<double>(delivered_chunks);
}

std::string MetricsReport::summary() const {
  std::ostringstream out;
  auto fmt_opt = [](std::optional<double> v, int precision) {
    if (!v) return std::string("NA");
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(precision);
    s << *v;
    return s.str();
  };
  out << "scenario=" << to_string(scenario) << " strategy="
      << to_string(strategy) << " policy=" << to_string(policy)
      << " cache_bytes=" << cache_bytes << " scale=" << scale
      << " seed=" << seed << "\n"
      << "  cache_hit_ratio=" << fmt_opt(cache_hit_ratio(), 6)
      << " (hits=" << cache_hits << " misses=" << cache_misses
      << " producer_hits=" << producer_hits << ")\n"
      << "  avg_hops=" << fmt_opt(avg_hops(), 4)
      << " avg_delay_ms=" << fmt_opt(avg_delay_ms(), 4)
      << " max_hops=" << max_hops << "\n"
      << "  replications=" << replications << " opportunistic="
      << opportunistic_insertions << " events=" << events_processed
      << " requests=" << request_events << " objects_completed="
      << objects_completed << " producer_node=" << producer << "\n";
  return out.str();
}

namespace {

struct Event {
  enum Kind : std::uint8_t { IssueChunk, InterestArrive, DataArrive };

  double time = 0.0;
  std::uint64_t seq = 0;
  Kind kind = IssueChunk;
  NodeId node = 0;
  ContentName name;
  FaceId from = kLocalFace;     // InterestArrive
  NodeId source = kNoNode;      // DataArrive: serving node
  bool from_cache = false;      // DataArrive
  NodeId chosen = kNoNode;      // DataArrive: CLFM/MAGIC target
  std::uint32_t branch_hops = 0;  // DataArrive: c for this branch
  std::uint32_t request = 0;    // IssueChunk
};

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

struct RequestState {
  NodeId client = 0;
  ObjectId object = 0;
  std::uint32_t chunks_total = 0;
  std::uint32_t next_chunk = 0;
  double chunk_issue_time = 0.0;
};

class Simulation {
 public:
  Simulation(const ScenarioConfig& config, const Topology& topo)
      : config_(config), topo_(topo) {
    validate();
    centrality_ = betweenness(topo_);
    producer_ = config_.producer == kNoNode ? auto_producer()
                                            : config_.producer;
    if (!topo_.has_node(producer_))
      throw ConfigError("producer node out of range");
    fib_ = populate_fib(topo_, producer_);
    depth_ = topo_.hop_distances(producer_);
    pit_timeout_ms_ = config_.pit_timeout_ms > 0.0 ? config_.pit_timeout_ms
                                                   : 4.0 * max_path_delay_ms();

    const std::uint64_t capacity = config_.cache_capacity_chunks();
    nodes_.reserve(topo_.node_count());
    for (NodeId v = 0; v < topo_.node_count(); ++v) {
      nodes_.emplace_back(v, capacity, config_.policy,
                          config_.popularity_capacity, config_.seed);
      nodes_[v].is_producer = (v == producer_);
      nodes_[v].next_hop = fib_[v];
      if (config_.strategy.kind == StrategyKind::TwoLru) {
        const std::size_t name_capacity = config_.name_cache_capacity > 0
                                              ? config_.name_cache_capacity
                                              : capacity;
        nodes_[v].name_cache.emplace(
            name_capacity, ReplacementPolicy::Lru,
            Rng::derive(config_.seed, 0x6e63'0000ULL + v));
      }
    }
    waiting_.resize(topo_.node_count());
    report_.per_node.resize(topo_.node_count());
  }

  MetricsReport execute(const std::vector<RequestEvent>* injected = nullptr) {
    if (injected)
      seed_requests(*injected);
    else
      build_requests();
    while (!queue_.empty()) {
      const Event event = queue_.top();
      queue_.pop();
      ++report_.events_processed;
      now_ = event.time;
      switch (event.kind) {
        case Event::IssueChunk: handle_issue(event); break;
        case Event::InterestArrive: handle_interest(event); break;
        case Event::DataArrive: handle_data(event); break;
      }
    }
    finish_checks();
    fill_report_tail();
    return report_;
  }

 private:
  void validate() const {
    const auto& c = config_;
    if (c.catalog == 0) throw ConfigError("catalog must be positive");
    if (c.avg_filesize == 0) throw ConfigError("avg_filesize must be positive");
    if (c.chunk_size == 0) throw ConfigError("chunk_size must be positive");
    if (c.duration_s <= 0.0) throw ConfigError("duration must be positive");
    if (c.request_rate < 0.0) throw ConfigError("request_rate must be >= 0");
    if (c.scale == 0) throw ConfigError("scale must be >= 1");
    if (c.warmup_fraction < 0.0 || c.warmup_fraction >= 1.0)
      throw ConfigError("warmup_fraction must be in [0,1)");
    if (c.alpha < 0.0 || c.beta < 0.0)
      throw ConfigError("mzipf parameters must be non-negative");
    if (c.cache_bytes > 0 && c.cache_capacity_chunks() == 0)
      throw ConfigError("cache smaller than one chunk after scaling");
  }

  NodeId auto_producer() const {
    // Farthest node from the most central one, so traffic crosses the
    // network instead of terminating next door. Ties: smallest id.
    NodeId central = 0;
    for (NodeId v = 1; v < topo_.node_count(); ++v)
      if (centrality_.score[v] > centrality_.score[central]) central = v;
    auto dist = topo_.hop_distances(central);
    NodeId far = 0;
    for (NodeId v = 1; v < topo_.node_count(); ++v)
      if (dist[v] > dist[far]) far = v;
    return far;
  }

  double max_path_delay_ms() const {
    double worst = 0.0;
    for (NodeId v = 0; v < topo_.node_count(); ++v) {
      double acc = 0.0;
      NodeId cur = v;
      while (cur != producer_) {
        const NodeId next = *fib_[cur];
        acc += topo_.edge_delay(cur, next);
        cur = next;
      }
      worst = std::max(worst, acc);
    }
    return worst;
  }

  std::vector<NodeId> client_nodes() const {
    std::vector<NodeId> clients;
    if (topo_.node_count() == 1) return {producer_};
    for (NodeId v = 0; v < topo_.node_count(); ++v)
      if (v != producer_) clients.push_back(v);
    return clients;
  }

  void build_requests() {
    const MZipf dist(config_.alpha, config_.beta, config_.effective_catalog());
    seed_requests(generate_workload(config_.duration_s, config_.request_rate,
                                    dist, client_nodes(),
                                    Rng::derive(config_.seed, 0x776bULL)));
  }

  void seed_requests(const std::vector<RequestEvent>& stream) {
    const std::uint32_t chunks = static_cast<std::uint32_t>(
        chunk_count(config_.effective_filesize(), config_.chunk_size));
    report_.request_events = stream.size();
    requests_.reserve(stream.size());
    for (const RequestEvent& ev : stream) {
      if (!topo_.has_node(ev.client))
        throw ConfigError("request client node out of range");
      if (ev.object < 1 || ev.object > config_.effective_catalog())
        throw ConfigError("request object rank out of catalog range");
      Event e;
      e.time = ev.time;
      e.seq = next_seq_++;
      e.kind = Event::IssueChunk;
      e.node = ev.client;
      e.request = static_cast<std::uint32_t>(requests_.size());
      requests_.push_back({ev.client, ev.object, chunks, 0, 0.0});
      queue_.push(e);
    }
    warmup_s_ = config_.warmup_fraction * config_.duration_s;
  }

  void push_interest(NodeId to, const ContentName& name, FaceId from,
                     double at) {
    Event e;
    e.time = at;
    e.seq = next_seq_++;
    e.kind = Event::InterestArrive;
    e.node = to;
    e.name = name;
    e.from = from;
    queue_.push(e);
  }

  void push_data(NodeId to, const ContentName& name, NodeId source,
                 bool from_cache, NodeId chosen, std::uint32_t branch_hops,
                 double at) {
    Event e;
    e.time = at;
    e.seq = next_seq_++;
    e.kind = Event::DataArrive;
    e.node = to;
    e.name = name;
    e.source = source;
    e.from_cache = from_cache;
    e.chosen = chosen;
    e.branch_hops = branch_hops;
    queue_.push(e);
  }

  double link_latency_s(NodeId a, NodeId b) const {
    return topo_.edge_delay(a, b) / 1000.0;
  }

  // --- interest path -------------------------------------------------

  void handle_issue(const Event& event) {
    RequestState& req = requests_[event.request];
    const ContentName name{req.object, req.next_chunk};
    req.chunk_issue_time = now_;
    ++report_.total_chunk_interests;
    if (now_ >= warmup_s_) ++report_.chunk_interests;
    waiting_[req.client][name].push_back(event.request);

    NodeState& node = nodes_[req.client];
    const InterestAction action = process_interest(node, name, kLocalFace, now_);
    switch (action.outcome) {
      case InterestOutcome::ServeFromCs:
        apply_hit_replication(kLocalFace, name);
        complete_one(event.request, req.client, true, req.client);
        break;
      case InterestOutcome::ProducerServe:
        apply_hit_replication(kLocalFace, name);
        complete_one(event.request, req.client, false, req.client);
        break;
      case InterestOutcome::Aggregated:
        break;
      case InterestOutcome::Forward:
        push_interest(action.next_hop, name, node_face(req.client),
                      now_ + link_latency_s(req.client, action.next_hop));
        break;
    }
    observe_interest(req.client, name);
  }

  void handle_interest(const Event& event) {
    NodeState& node = nodes_[event.node];
    const InterestAction action =
        process_interest(node, event.name, event.from, now_);
    switch (action.outcome) {
      case InterestOutcome::ServeFromCs:
        apply_hit_replication(event.from, event.name);
        create_data(event.node, event.from, event.name, true);
        break;
      case InterestOutcome::ProducerServe:
        apply_hit_replication(event.from, event.name);
        create_data(event.node, event.from, event.name, false);
        break;
      case InterestOutcome::Aggregated:
        break;
      case InterestOutcome::Forward:
        push_interest(action.next_hop, event.name, node_face(event.node),
                      now_ + link_latency_s(event.node, action.next_hop));
        break;
    }
    observe_interest(event.node, event.name);
  }

  void observe_interest(NodeId v, const ContentName& name) {
    const auto fanout = on_request_observed(config_.strategy, nodes_[v], name,
                                            topo_.neighbors(v));
    if (fanout.empty()) return;
    // MPC threshold crossing: cache locally and push to one-hop neighbors,
    // all through the normal CS insert path.
    replication_insert(v, name);
    for (NodeId u : fanout) replication_insert(u, name);
  }

  void apply_hit_replication(FaceId interest_from, const ContentName& name) {
    if (auto target = replication_target_on_hit(config_.strategy,
                                                interest_from))
      replication_insert(*target, name);
  }

  void replication_insert(NodeId target, const ContentName& name) {
    nodes_[target].cs.insert(name);
    ++report_.replications;
  }

  // --- data path ------------------------------------------------------

  // Walks the PIT chain below `first_face`, following each entry's
  // creating face, and returns the branch path starting at `source`.
  std::vector<NodeId> branch_path(NodeId source, FaceId first_face,
                                  const ContentName& name) const {
    std::vector<NodeId> path{source};
    FaceId face = first_face;
    while (face != kLocalFace) {
      const NodeId v = face_node(face);
      path.push_back(v);
      auto it = nodes_[v].pit.find(name);
      if (it == nodes_[v].pit.end())
        throw SimError("broken PIT chain at node " + std::to_string(v));
      face = it->second.faces.front();
    }
    return path;
  }

  // Path from `source` down to `v` along the forwarding tree.
  std::vector<NodeId> ancestor_path(NodeId source, NodeId v) const {
    std::vector<NodeId> up{v};
    NodeId cur = v;
    while (cur != source) {
      cur = *fib_[cur];
      up.push_back(cur);
    }
    std::reverse(up.begin(), up.end());
    return up;
  }

  NodeId pick_branch_target(std::span<const NodeId> path,
                            const ContentName& name) const {
    switch (config_.strategy.kind) {
      case StrategyKind::Clfm: return clfm_pick(path, centrality_);
      case StrategyKind::Magic: return magic_pick(path, nodes_, name);
      default: return kNoNode;
    }
  }

  void create_data(NodeId source, FaceId first_face, const ContentName& name,
                   bool from_cache) {
    const auto path = branch_path(source, first_face, name);
    const auto hops = static_cast<std::uint32_t>(path.size() - 1);
    const NodeId chosen = pick_branch_target(path, name);
    push_data(path[1], name, source, from_cache, chosen, hops,
              now_ + link_latency_s(source, path[1]));
  }

  void handle_data(const Event& event) {
    const NodeId v = event.node;
    PathContext ctx;
    ctx.branch_hops = event.branch_hops;
    ctx.hops_from_source = depth_[v] - depth_[event.source];
    ctx.chosen = event.chosen;

    DataResult result =
        process_data(nodes_[v], event.name, config_.strategy, ctx, now_);
    if (result.unsolicited) {
      ++report_.unsolicited_data;
      return;
    }
    if (result.cached) ++report_.opportunistic_insertions;
    report_.max_pit_residency_ms = std::max(
        report_.max_pit_residency_ms, result.pit_residency_s * 1000.0);

    for (std::size_t i = 0; i < result.fanout.size(); ++i) {
      const FaceId face = result.fanout[i];
      if (face == kLocalFace) {
        deliver_waiting(v, event.name, event.from_cache, event.source);
        continue;
      }
      const NodeId next = face_node(face);
      NodeId chosen = event.chosen;
      std::uint32_t branch_hops = event.branch_hops;
      if (i != 0) {
        // Aggregated branch: splice the upstream prefix onto this face's
        // own PIT chain and re-pick the cache target for the new branch.
        auto path = ancestor_path(event.source, v);
        const auto tail = branch_path(v, face, event.name);
        path.insert(path.end(), tail.begin() + 1, tail.end());
        branch_hops = static_cast<std::uint32_t>(path.size() - 1);
        chosen = pick_branch_target(path, event.name);
      }
      push_data(next, event.name, event.source, event.from_cache, chosen,
                branch_hops, now_ + link_latency_s(v, next));
    }
  }

  // --- delivery & accounting -------------------------------------------

  void record_delivery(std::uint32_t request_idx, NodeId at, bool from_cache,
                       NodeId source) {
    const RequestState& req = requests_[request_idx];
    const std::uint32_t hops = depth_[at] - depth_[source];
    if (from_cache)
      ++report_.total_cache_hits;
    else
      ++report_.total_producer_hits;
    if (req.chunk_issue_time >= warmup_s_) {
      ++report_.delivered_chunks;
      report_.sum_hops += hops;
      report_.max_hops = std::max(report_.max_hops, hops);
      report_.sum_delay_ms += (now_ - req.chunk_issue_time) * 1000.0;
      if (from_cache) {
        ++report_.cache_hits;
        ++report_.per_node[source].cache_hits;
      } else {
        ++report_.producer_hits;
        ++report_.cache_misses;
        ++report_.per_node[req.client].cache_misses;
      }
    }
  }

  void advance_request(std::uint32_t request_idx) {
    RequestState& req = requests_[request_idx];
    ++req.next_chunk;
    if (req.next_chunk >= req.chunks_total) {
      ++report_.objects_completed;
      return;
    }
    Event e;
    e.time = now_;
    e.seq = next_seq_++;
    e.kind = Event::IssueChunk;
    e.node = req.client;
    e.request = request_idx;
    queue_.push(e);
  }

  // Completion via the requester's own CS or co-located producer: only the
  // issuing request is served; other waiters keep their pending Data.
  void complete_one(std::uint32_t request_idx, NodeId at, bool from_cache,
                    NodeId source) {
    auto& waits = waiting_[at];
    const ContentName name{requests_[request_idx].object,
                           requests_[request_idx].next_chunk};
    auto it = waits.find(name);
    auto& list = it->second;
    list.erase(std::find(list.begin(), list.end(), request_idx));
    if (list.empty()) waits.erase(it);
    record_delivery(request_idx, at, from_cache, source);
    advance_request(request_idx);
  }

  void deliver_waiting(NodeId at, const ContentName& name, bool from_cache,
                       NodeId source) {
    auto& waits = waiting_[at];
    auto it = waits.find(name);
    if (it == waits.end()) return;  // already served by a local CS hit
    const std::vector<std::uint32_t> ready = std::move(it->second);
    waits.erase(it);
    for (std::uint32_t request_idx : ready) {
      record_delivery(request_idx, at, from_cache, source);
      advance_request(request_idx);
    }
  }

  // --- end of run -------------------------------------------------------

  void finish_checks() const {
    for (const NodeState& node : nodes_) {
      if (!node.pit.empty())
        throw SimError("PIT not drained at node " + std::to_string(node.id));
      if (node.cs.size() > node.cs.capacity())
        throw SimError("CS over capacity at node " + std::to_string(node.id));
    }
    for (const auto& waits : waiting_)
      if (!waits.empty()) throw SimError("unanswered chunk interests remain");
    const std::uint64_t delivered =
        report_.total_cache_hits + report_.total_producer_hits;
    if (delivered != report_.total_chunk_interests)
      throw SimError("conservation violated: " +
                     std::to_string(report_.total_chunk_interests) +
                     " interests vs " + std::to_string(delivered) +
                     " deliveries");
    if (report_.max_pit_residency_ms > pit_timeout_ms_ + 1e-9)
      throw SimError("PIT residency exceeded timeout");
  }

  void fill_report_tail() {
    report_.scenario = config_.scenario;
    report_.strategy = config_.strategy.kind;
    report_.policy = config_.policy;
    report_.cache_bytes = config_.cache_bytes;
    report_.scale = config_.scale;
    report_.seed = config_.seed;
    report_.pit_timeout_ms = pit_timeout_ms_;
    report_.producer = producer_;
    for (NodeId v = 0; v < topo_.node_count(); ++v) {
      report_.per_node[v].cs_lookup_hits = nodes_[v].cs_lookup_hits;
      report_.per_node[v].cs_lookup_misses = nodes_[v].cs_lookup_misses;
      report_.per_node[v].cs_entries_end = nodes_[v].cs.size();
    }
  }
  const ScenarioConfig& config_;
  const Topology& topo_;
  CentralityMap centrality_;
  NodeId producer_ = 0;
  std::vector<std::optional<NodeId>> fib_;
  std::vector<std::uint32_t> depth_;
  double pit_timeout_ms_ = 0.0;
  double warmup_s_ = 0.0;
  double now_ = 0.0;
  std::uint64_t next_seq_ = 0;

  std::vector<NodeState> nodes_;
  std::vector<RequestState> requests_;
  std::vector<std::unordered_map<ContentName, std::vector<std::uint32_t>,
                                 ContentNameHash>>
      waiting_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  MetricsReport report_;
};

}  // namespace

MetricsReport run(const ScenarioConfig& config, const Topology& topo) {
  Simulation sim(config, topo);
  return sim.execute();
}

MetricsReport run(const ScenarioConfig& config) {
  if (config.topology_path.empty())
    throw ConfigError("config has no topology path");
  const Topology topo = Topology::from_file(config.topology_path);
  return run(config, topo);
}

MetricsReport run_with_requests(const ScenarioConfig& config,
                                const Topology& topo,
                                const std::vector<RequestEvent>& requests) {
  Simulation sim(config, topo);
  return sim.execute(&requests);
}

}  // namespace icnsim
