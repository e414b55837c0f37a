#include "icnsim/strategies.hpp"

#include <algorithm>

#include "icnsim/ccn_node.hpp"

namespace icnsim {

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Lce: return "lce";
    case StrategyKind::TwoLru: return "2lru";
    case StrategyKind::Clfm: return "clfm";
    case StrategyKind::ProbCache: return "probcache";
    case StrategyKind::Magic: return "magic";
    case StrategyKind::Lcd: return "lcd";
    case StrategyKind::Mpc: return "mpc";
  }
  return "?";
}

std::optional<StrategyKind> parse_strategy(const std::string& text) {
  if (text == "lce") return StrategyKind::Lce;
  if (text == "2lru") return StrategyKind::TwoLru;
  if (text == "clfm") return StrategyKind::Clfm;
  if (text == "probcache") return StrategyKind::ProbCache;
  if (text == "magic") return StrategyKind::Magic;
  if (text == "lcd") return StrategyKind::Lcd;
  if (text == "mpc") return StrategyKind::Mpc;
  return std::nullopt;
}

PopularityTable::PopularityTable(std::size_t capacity) : capacity_(capacity) {}

std::uint64_t PopularityTable::increment(const ContentName& name) {
  if (capacity_ == 0) return 0;
  auto it = entries_.find(name);
  if (it != entries_.end()) {
    recency_.splice(recency_.begin(), recency_, it->second.recency_it);
    return ++it->second.count;
  }
  if (entries_.size() >= capacity_) {
    entries_.erase(recency_.back());
    recency_.pop_back();
  }
  recency_.push_front(name);
  entries_.emplace(name, Entry{1, recency_.begin()});
  return 1;
}

std::uint64_t PopularityTable::count(const ContentName& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? 0 : it->second.count;
}

double probcache_probability(std::uint32_t c, std::uint32_t x, double t_tw) {
  if (c == 0 || x == 0 || t_tw <= 0.0) return 0.0;
  const double times_in = (static_cast<double>(c) - x + 1.0) / t_tw;
  const double cache_weight = static_cast<double>(x) / c;
  return std::clamp(times_in * cache_weight, 0.0, 1.0);
}

NodeId clfm_pick(std::span<const NodeId> path,
                 const CentralityMap& centrality) {
  if (path.size() < 2) return kNoNode;
  std::size_t best = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (centrality.score[path[i]] >= centrality.score[path[best]]) best = i;
  }
  return best == 0 ? kNoNode : path[best];
}

NodeId magic_pick(std::span<const NodeId> path,
                  std::span<const NodeState> nodes, const ContentName& name) {
  if (path.size() < 2) return kNoNode;
  double best_gain = 0.0;
  NodeId best = kNoNode;
  std::size_t nearest_copy = 0;  // the source holds a copy by definition
  for (std::size_t i = 1; i < path.size(); ++i) {
    const NodeState& node = nodes[path[i]];
    const double hops_saved = static_cast<double>(i - nearest_copy);
    const double f_new = static_cast<double>(node.popularity.count(name));
    double f_victim = 0.0;
    if (node.cs.size() >= node.cs.capacity() && node.cs.capacity() > 0) {
      if (auto victim = node.cs.eviction_candidate())
        f_victim = static_cast<double>(node.popularity.count(*victim));
    }
    const double gain = (f_new - f_victim) * hops_saved;
    if (gain > 0.0 && gain >= best_gain) {
      best_gain = gain;
      best = path[i];
    }
    if (node.cs.contains(name)) nearest_copy = i;
  }
  return best;
}

bool decide_on_data(const CachingStrategy& strategy, NodeState& node,
                    const ContentName& name, const PathContext& ctx,
                    Rng& rng) {
  switch (strategy.kind) {
    case StrategyKind::Lce:
      return true;
    case StrategyKind::TwoLru: {
      if (!node.name_cache) return false;
      if (node.name_cache->lookup(name)) return true;
      node.name_cache->insert(name);
      return false;
    }
    case StrategyKind::Clfm:
    case StrategyKind::Magic:
      return ctx.chosen == node.id;
    case StrategyKind::ProbCache: {
      const double p = probcache_probability(ctx.branch_hops,
                                             ctx.hops_from_source,
                                             strategy.probcache_ttw);
      return rng.next_double() < p;
    }
    case StrategyKind::Lcd:
    case StrategyKind::Mpc:
      return false;
  }
  return false;
}

std::optional<NodeId> replication_target_on_hit(
    const CachingStrategy& strategy, FaceId interest_from) {
  if (strategy.kind != StrategyKind::Lcd) return std::nullopt;
  if (interest_from == kLocalFace) return std::nullopt;
  return face_node(interest_from);
}

std::vector<NodeId> on_request_observed(const CachingStrategy& strategy,
                                        NodeState& node,
                                        const ContentName& name,
                                        std::span<const NodeId> neighbors) {
  if (strategy.kind == StrategyKind::Magic) {
    node.popularity.increment(name);
    return {};
  }
  if (strategy.kind != StrategyKind::Mpc) return {};
  const std::uint64_t count = node.popularity.increment(name);
  if (count != strategy.mpc_threshold) return {};
  return {neighbors.begin(), neighbors.end()};
}

}  // namespace icnsim
