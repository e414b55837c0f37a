#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "icnsim/content_name.hpp"
#include "icnsim/rng.hpp"
#include "icnsim/topology.hpp"

namespace icnsim {

struct NodeState;

enum class StrategyKind : std::uint8_t {
  Lce,
  TwoLru,
  Clfm,
  ProbCache,
  Magic,
  Lcd,
  Mpc,
};

const char* to_string(StrategyKind kind);
std::optional<StrategyKind> parse_strategy(const std::string& text);

struct CachingStrategy {
  StrategyKind kind = StrategyKind::Lce;
  double probcache_ttw = 10.0;     // path-capacity weighting constant
  std::uint32_t mpc_threshold = 3; // requests before replication fires

  bool uses_managed_replication() const {
    return kind == StrategyKind::Lcd || kind == StrategyKind::Mpc;
  }
};

/// Bounded per-name request counter; overflow evicts the least recently
/// incremented name.
class PopularityTable {
 public:
  explicit PopularityTable(std::size_t capacity);

  /// Bumps the counter, evicting the coldest tracked name when full.
  /// Returns the new count.
  std::uint64_t increment(const ContentName& name);
  std::uint64_t count(const ContentName& name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::uint64_t count = 0;
    std::list<ContentName>::iterator recency_it;
  };
  std::size_t capacity_;
  std::unordered_map<ContentName, Entry, ContentNameHash> entries_;
  std::list<ContentName> recency_;  // front = most recently incremented
};

/// Where a Data message sits on its way down one delivery branch.
/// `path` runs from the content source (producer node or hitting cache)
/// to the branch requester's attachment node; `hops_from_source` is this
/// node's position on it.
struct PathContext {
  std::uint32_t branch_hops = 0;       // c: hops source -> requester
  std::uint32_t hops_from_source = 0;  // x: hops source -> this node, >= 1
  NodeId chosen = kNoNode;             // CLFM/MAGIC: precomputed target
};

/// Opportunistic Data-path decision. One rng draw per node for ProbCache;
/// a 2-LRU miss inserts the name into the node's virtual name cache.
bool decide_on_data(const CachingStrategy& strategy, NodeState& node,
                    const ContentName& name, const PathContext& ctx, Rng& rng);

/// LCD replication target after a hit (CS or producer) at a node: the
/// downstream neighbor the interest arrived from. None for local clients
/// or for every other strategy.
std::optional<NodeId> replication_target_on_hit(
    const CachingStrategy& strategy, FaceId interest_from);

/// Per-interest bookkeeping (MPC and MAGIC popularity counts). Returns the
/// neighbor replication fan-out when an MPC threshold crossing fires; the
/// caller also inserts locally.
std::vector<NodeId> on_request_observed(const CachingStrategy& strategy,
                                        NodeState& node,
                                        const ContentName& name,
                                        std::span<const NodeId> neighbors);

/// ProbCache probability ((c - x + 1) / t_tw) * (x / c), clamped to [0,1].
double probcache_probability(std::uint32_t c, std::uint32_t x, double t_tw);

/// CLFM target: the max-centrality node on the path (source included),
/// ties toward the requester. kNoNode when the source itself wins.
NodeId clfm_pick(std::span<const NodeId> path, const CentralityMap& centrality);

/// MAGIC target: argmax over downstream path nodes of
/// (pop(name) - pop(victim)) * hops-to-nearest-upstream-copy, requiring a
/// strictly positive gain; ties toward the requester.
NodeId magic_pick(std::span<const NodeId> path,
                  std::span<const NodeState> nodes, const ContentName& name);

}  // namespace icnsim
