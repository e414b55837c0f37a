#include "icnsim/ccn_node.hpp"

namespace icnsim {

InterestAction process_interest(NodeState& node, const ContentName& name,
                                FaceId from, double now) {
  if (node.cs.lookup(name)) {
    ++node.cs_lookup_hits;
    return {InterestOutcome::ServeFromCs};
  }
  ++node.cs_lookup_misses;

  if (auto it = node.pit.find(name); it != node.pit.end()) {
    it->second.add_face(from);
    return {InterestOutcome::Aggregated};
  }

  if (node.is_producer) return {InterestOutcome::ProducerServe};
  if (!node.next_hop)
    throw SimError("no FIB route at node " + std::to_string(node.id) +
                   ": producer unreachable");
  node.pit.emplace(name, PitEntry{{from}, now});
  return {InterestOutcome::Forward, *node.next_hop};
}

DataResult process_data(NodeState& node, const ContentName& name,
                        const CachingStrategy& strategy, const PathContext& ctx,
                        double now) {
  DataResult result;
  auto it = node.pit.find(name);
  if (it == node.pit.end()) {
    result.unsolicited = true;
    return result;
  }

  if (decide_on_data(strategy, node, name, ctx, node.decision_rng))
    result.cached = node.cs.insert(name).inserted;

  result.fanout = std::move(it->second.faces);
  result.pit_residency_s = now - it->second.created_at;
  node.pit.erase(it);
  return result;
}

std::vector<std::optional<NodeId>> populate_fib(const Topology& topo,
                                                NodeId producer) {
  if (!topo.has_node(producer))
    throw TopologyError("populate_fib: unknown producer node " +
                        std::to_string(producer));
  std::vector<std::optional<NodeId>> fib(topo.node_count());
  for (NodeId v = 0; v < topo.node_count(); ++v) {
    if (v == producer) continue;
    fib[v] = topo.shortest_path(v, producer)[1];
  }
  return fib;
}

}  // namespace icnsim
