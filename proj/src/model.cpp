#include "haul/model.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace haul {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Store:
      return "store";
    case NodeKind::Warehouse:
      return "warehouse";
    case NodeKind::Joint:
      return "joint";
  }
  return "unknown";
}

NodeId TransportGraph::add_node(NodeKind kind, double x, double y, Units supply,
                                Units demand) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{id, kind, x, y, supply, demand});
  adjacency_.emplace_back();
  return id;
}

void TransportGraph::add_edge(Edge e) {
  if (e.a >= nodes_.size() || e.b >= nodes_.size()) {
    throw std::out_of_range("edge endpoint does not name an existing node");
  }
  if (e.a > e.b) std::swap(e.a, e.b);
  const std::size_t index = edges_.size();
  edges_.push_back(e);
  adjacency_[e.a].push_back(index);
  if (e.b != e.a) adjacency_[e.b].push_back(index);
}

bool TransportGraph::has_edge(NodeId a, NodeId b) const {
  return find_edge(a, b) != nullptr;
}

const Edge* TransportGraph::find_edge(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  if (a >= nodes_.size() || b >= nodes_.size()) return nullptr;
  const auto& incident = adjacency_[a];
  for (std::size_t index : incident) {
    const Edge& e = edges_[index];
    if (e.a == a && e.b == b) return &e;
  }
  return nullptr;
}

Units TransportGraph::total_supply() const {
  Units total = 0;
  for (const Node& n : nodes_) total += n.supply;
  return total;
}

Units TransportGraph::total_demand() const {
  Units total = 0;
  for (const Node& n : nodes_) total += n.demand;
  return total;
}

namespace {

std::vector<Edge> canonical_edges(const std::vector<Edge>& edges) {
  std::vector<Edge> sorted = edges;
  for (Edge& e : sorted) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Edge& l, const Edge& r) {
    return std::tie(l.a, l.b, l.distance_km, l.velocity_kmh, l.time_min) <
           std::tie(r.a, r.b, r.distance_km, r.velocity_kmh, r.time_min);
  });
  return sorted;
}

}  // namespace

bool operator==(const TransportGraph& lhs, const TransportGraph& rhs) {
  return lhs.map_size_ == rhs.map_size_ && lhs.nodes_ == rhs.nodes_ &&
         canonical_edges(lhs.edges_) == canonical_edges(rhs.edges_);
}

std::vector<std::string> validate_parts(double map_size,
                                        std::span<const Node> nodes,
                                        std::span<const Edge> edges) {
  std::vector<std::string> violations;
  auto report = [&violations](const std::string& message) {
    violations.push_back(message);
  };

  if (map_size <= 0.0) report("map_size must be positive");

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    std::ostringstream tag;
    tag << "node " << n.id;
    if (n.id != i) {
      report(tag.str() + ": ids must be dense 0..n-1 in order");
    }
    if (n.supply < 0) report(tag.str() + ": negative supply");
    if (n.demand < 0) report(tag.str() + ": negative demand");
    switch (n.kind) {
      case NodeKind::Warehouse:
        if (n.demand != 0) report(tag.str() + ": warehouse demand must be 0");
        break;
      case NodeKind::Store:
        if (n.supply != 0) report(tag.str() + ": store supply must be 0");
        break;
      case NodeKind::Joint:
        if (n.supply != 0 || n.demand != 0) {
          report(tag.str() + ": joint supply and demand must be 0");
        }
        break;
    }
    if (!(n.x >= 0.0 && n.x <= map_size) || !(n.y >= 0.0 && n.y <= map_size)) {
      report(tag.str() + ": coordinates outside [0, map_size]");
    }
  }

  std::vector<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges) {
    NodeId a = e.a;
    NodeId b = e.b;
    if (a > b) std::swap(a, b);
    std::ostringstream tag;
    tag << "edge " << e.a << "--" << e.b;
    if (a >= nodes.size() || b >= nodes.size()) {
      report(tag.str() + ": dangling endpoint");
      continue;
    }
    if (a == b) report(tag.str() + ": self-loop");
    if (std::find(seen.begin(), seen.end(), std::make_pair(a, b)) !=
        seen.end()) {
      report(tag.str() + ": duplicate undirected pair");
    }
    seen.emplace_back(a, b);
    if (!(e.distance_km > 0.0)) report(tag.str() + ": distance must be positive");
    if (e.velocity_kmh <= 0) report(tag.str() + ": velocity must be positive");
    if (e.time_min < 0) report(tag.str() + ": negative time");
    if (e.velocity_kmh > 0 &&
        e.time_min != travel_time_min(e.distance_km, e.velocity_kmh)) {
      report(tag.str() + ": time does not match truncate(distance/velocity*60)");
    }
  }

  return violations;
}

std::vector<std::string> validate(const TransportGraph& g) {
  std::vector<std::string> violations =
      validate_parts(g.map_size(), g.nodes(), g.edges());
  if (!is_connected(g)) {
    violations.push_back("graph is disconnected");
  }
  return violations;
}

bool is_connected(const TransportGraph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  std::vector<bool> reached(n, false);
  std::queue<NodeId> frontier;
  frontier.push(0);
  reached[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (std::size_t index : g.incident_edges(u)) {
      const Edge& e = g.edges()[index];
      const NodeId v = (e.a == u) ? e.b : e.a;
      if (!reached[v]) {
        reached[v] = true;
        ++count;
        frontier.push(v);
      }
    }
  }
  return count == n;
}

}  // namespace haul
