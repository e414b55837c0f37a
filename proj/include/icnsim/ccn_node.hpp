#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "icnsim/content_name.hpp"
#include "icnsim/content_store.hpp"
#include "icnsim/strategies.hpp"
#include "icnsim/topology.hpp"

namespace icnsim {

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Downstream faces awaiting Data for one name. The creating face stays
/// first; later aggregated faces append in arrival order.
struct PitEntry {
  std::vector<FaceId> faces;
  double created_at = 0.0;

  bool add_face(FaceId face) {
    for (FaceId f : faces)
      if (f == face) return false;
    faces.push_back(face);
    return true;
  }
};

/// One content router: CS + PIT + FIB plus strategy-local state.
struct NodeState {
  NodeId id = 0;
  bool is_producer = false;
  std::optional<NodeId> next_hop;  // FIB: successor toward the producer
  ContentStore cs;
  std::unordered_map<ContentName, PitEntry, ContentNameHash> pit;
  PopularityTable popularity;              // MPC / MAGIC
  std::optional<ContentStore> name_cache;  // 2-LRU virtual cache
  Rng decision_rng;                        // ProbCache draws

  // Local diagnostics (raw CS lookup outcomes at this node).
  std::uint64_t cs_lookup_hits = 0;
  std::uint64_t cs_lookup_misses = 0;

  NodeState(NodeId node_id, std::size_t cs_capacity, ReplacementPolicy policy,
            std::size_t popularity_capacity, std::uint64_t seed)
      : id(node_id),
        cs(cs_capacity, policy, Rng::derive(seed, 0x6373'0000ULL + node_id)),
        popularity(popularity_capacity),
        decision_rng(Rng::derive(seed, 0x7072'0000ULL + node_id)) {}
};

enum class InterestOutcome : std::uint8_t {
  ServeFromCs,   // CS hit; Data goes back out the arrival face
  Aggregated,    // PIT hit; face recorded, nothing forwarded
  Forward,       // PIT entry created, forwarded per FIB
  ProducerServe, // FIB resolves locally: this node holds the catalog
};

struct InterestAction {
  InterestOutcome outcome;
  NodeId next_hop = kNoNode;  // Forward only
};

/// The CCN pipeline, in exactly CS -> PIT -> FIB order.
/// Throws SimError when a non-producer node has no route.
InterestAction process_interest(NodeState& node, const ContentName& name,
                                FaceId from, double now);

struct DataResult {
  bool unsolicited = false;       // no PIT state: dropped
  bool cached = false;            // opportunistic insertion happened
  std::vector<FaceId> fanout;     // faces the Data is forwarded to
  double pit_residency_s = 0.0;
};

/// Consumes the PIT entry, applies the strategy's opportunistic decision,
/// and reports the fan-out. Data without PIT state is dropped and flagged.
DataResult process_data(NodeState& node, const ContentName& name,
                        const CachingStrategy& strategy, const PathContext& ctx,
                        double now);

/// Per-node FIB next hops toward `producer`: each node's successor on
/// shortest_path(node, producer). The producer's own slot is empty.
std::vector<std::optional<NodeId>> populate_fib(const Topology& topo,
                                                NodeId producer);

}  // namespace icnsim
