#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icnsim/content_name.hpp"

namespace icnsim {

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  double delay_ms = 0.0;
};

/// Undirected, connected router graph with per-link propagation delay.
/// Node ids are dense integers 0..node_count()-1. Routing is hop-based;
/// delays are only accumulated for the delay metric.
class Topology {
 public:
  Topology(std::size_t node_count, std::vector<Edge> edges,
           std::string name = "");

  /// Parses the edge-list format: `#` comment lines, data lines
  /// `<nodeA> <nodeB> <delay_ms>`. Throws TopologyError naming the
  /// offending line on parse or validation failure.
  static Topology parse(std::string_view text, std::string name = "");
  static Topology from_file(const std::string& path);

  std::size_t node_count() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  /// Neighbors of `node`, sorted ascending.
  std::span<const NodeId> neighbors(NodeId node) const;
  double edge_delay(NodeId a, NodeId b) const;
  bool has_node(NodeId node) const { return node < adjacency_.size(); }

  /// Minimum-hop path from `from` to `to`, inclusive. Ties are broken by
  /// the lexicographically smallest node sequence, oriented from the
  /// smaller endpoint so that path(a,b) is always path(b,a) reversed.
  std::vector<NodeId> shortest_path(NodeId from, NodeId to) const;

  /// Hop distance from `source` to every node (BFS).
  std::vector<std::uint32_t> hop_distances(NodeId source) const;

  std::uint32_t diameter() const;

 private:
  void require_node(NodeId node, const char* what) const;

  std::string name_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<double>> adjacency_delay_;
};

/// Unnormalized betweenness scores (Brandes over hop-count shortest paths;
/// each unordered pair counted once, fractional credit on ties).
struct CentralityMap {
  std::vector<double> score;
};

CentralityMap betweenness(const Topology& topo);

}  // namespace icnsim
