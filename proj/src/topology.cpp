#include "icnsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace icnsim {

Topology::Topology(std::size_t node_count, std::vector<Edge> edges,
                   std::string name)
    : name_(std::move(name)), edges_(std::move(edges)) {
  if (node_count == 0) throw TopologyError("topology has no nodes");
  adjacency_.assign(node_count, {});
  adjacency_delay_.assign(node_count, {});

  std::vector<std::vector<bool>> seen(node_count);
  for (auto& row : seen) row.assign(node_count, false);

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string where = "edge " + std::to_string(e.a) + "-" +
                              std::to_string(e.b) + " (#" + std::to_string(i) +
                              ")";
    if (e.a >= node_count || e.b >= node_count)
      throw TopologyError(where + ": node id out of range");
    if (e.a == e.b) throw TopologyError(where + ": self-loop");
    if (!(e.delay_ms >= 0.0) || !std::isfinite(e.delay_ms))
      throw TopologyError(where + ": negative or non-finite delay");
    if (seen[e.a][e.b]) throw TopologyError(where + ": duplicate edge");
    seen[e.a][e.b] = seen[e.b][e.a] = true;
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    adjacency_delay_[v].resize(adjacency_[v].size());
  }
  for (const Edge& e : edges_) {
    auto set_delay = [&](NodeId u, NodeId w) {
      auto& nbrs = adjacency_[u];
      auto it = std::lower_bound(nbrs.begin(), nbrs.end(), w);
      adjacency_delay_[u][static_cast<std::size_t>(it - nbrs.begin())] =
          e.delay_ms;
    };
    set_delay(e.a, e.b);
    set_delay(e.b, e.a);
  }

  // Connectivity: every node reachable from 0.
  auto dist = hop_distances(0);
  for (std::size_t v = 0; v < node_count; ++v) {
    if (dist[v] == std::numeric_limits<std::uint32_t>::max())
      throw TopologyError("disconnected: node " + std::to_string(v) +
                          " unreachable from node 0");
  }
}

Topology Topology::parse(std::string_view text, std::string name) {
  std::vector<Edge> edges;
  NodeId max_node = 0;
  bool any = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    // strip comments and whitespace
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::string trimmed(line);
    if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream in(trimmed);
    long long a = -1, b = -1;
    double delay = 0.0;
    if (!(in >> a >> b >> delay))
      throw TopologyError(name + ": line " + std::to_string(line_no) +
                          ": expected `<nodeA> <nodeB> <delay_ms>`");
    std::string rest;
    if (in >> rest)
      throw TopologyError(name + ": line " + std::to_string(line_no) +
                          ": trailing tokens");
    if (a < 0 || b < 0)
      throw TopologyError(name + ": line " + std::to_string(line_no) +
                          ": negative node id");
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), delay});
    max_node = std::max({max_node, static_cast<NodeId>(a),
                         static_cast<NodeId>(b)});
    any = true;
  }
  if (!any) throw TopologyError(name + ": no edges");
  return Topology(static_cast<std::size_t>(max_node) + 1, std::move(edges),
                  std::move(name));
}

Topology Topology::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TopologyError("cannot open topology file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void Topology::require_node(NodeId node, const char* what) const {
  if (!has_node(node))
    throw TopologyError(std::string(what) + ": unknown node id " +
                        std::to_string(node));
}

std::span<const NodeId> Topology::neighbors(NodeId node) const {
  require_node(node, "neighbors");
  return adjacency_[node];
}

double Topology::edge_delay(NodeId a, NodeId b) const {
  require_node(a, "edge_delay");
  require_node(b, "edge_delay");
  const auto& nbrs = adjacency_[a];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b)
    throw TopologyError("edge_delay: no edge " + std::to_string(a) + "-" +
                        std::to_string(b));
  return adjacency_delay_[a][static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<std::uint32_t> Topology::hop_distances(NodeId source) const {
  require_node(source, "hop_distances");
  constexpr auto inf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(node_count(), inf);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adjacency_[u]) {
      if (dist[v] == inf) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<NodeId> Topology::shortest_path(NodeId from, NodeId to) const {
  require_node(from, "shortest_path");
  require_node(to, "shortest_path");
  if (from == to) return {from};

  // Canonical orientation: build the lexicographically smallest min-hop
  // sequence from the smaller id, reverse on demand. Greedy walk over BFS
  // distances from the far endpoint yields the lex-min path.
  const NodeId lo = std::min(from, to);
  const NodeId hi = std::max(from, to);
  auto dist = hop_distances(hi);
  std::vector<NodeId> path{lo};
  NodeId cur = lo;
  while (cur != hi) {
    NodeId next = kNoNode;
    for (NodeId v : adjacency_[cur]) {
      if (dist[v] + 1 == dist[cur]) {
        next = v;
        break;  // neighbors sorted: first feasible is smallest
      }
    }
    path.push_back(next);
    cur = next;
  }
  if (from != lo) std::reverse(path.begin(), path.end());
  return path;
}

std::uint32_t Topology::diameter() const {
  std::uint32_t best = 0;
  for (NodeId v = 0; v < node_count(); ++v) {
    for (std::uint32_t d : hop_distances(v))
      best = std::max(best, d);
  }
  return best;
}

CentralityMap betweenness(const Topology& topo) {
  const std::size_t n = topo.node_count();
  CentralityMap out;
  out.score.assign(n, 0.0);

  // Brandes, unweighted. Each undirected pair is accumulated twice (once
  // per endpoint as source), so halve at the end.
  std::vector<std::uint64_t> sigma(n);
  std::vector<std::int64_t> dist(n);
  std::vector<double> delta(n);
  std::vector<std::vector<NodeId>> preds(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0);
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    sigma[s] = 1;
    dist[s] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (NodeId v : topo.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId u : preds[w]) {
        delta[u] += static_cast<double>(sigma[u]) /
                    static_cast<double>(sigma[w]) * (1.0 + delta[w]);
      }
      if (w != s) out.score[w] += delta[w];
    }
  }
  for (double& v : out.score) v /= 2.0;
  return out;
}

}  // namespace icnsim
