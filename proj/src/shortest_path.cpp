#include "haul/shortest_path.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace haul {

ShortestPaths::ShortestPaths(const TransportGraph& g, NodeId from)
    : graph_(&g), from_(from) {
  const std::size_t n = g.node_count();
  if (from >= n) throw std::out_of_range("shortest paths: bad origin node");
  labels_.resize(n);

  // Dijkstra; valid because edge_cost is never negative.
  using QueueEntry = std::tuple<double, std::size_t, NodeId>;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                      std::greater<QueueEntry>>
      queue;
  std::vector<bool> seen(n, false);

  labels_[from].path = {from};
  seen[from] = true;
  queue.emplace(0.0, 0, from);

  while (!queue.empty()) {
    const auto [cost, hops, u] = queue.top();
    queue.pop();
    Label& lu = labels_[u];
    if (lu.settled) continue;
    lu.settled = true;
    for (std::size_t index : g.incident_edges(u)) {
      const Edge& e = g.edges()[index];
      const NodeId v = (e.a == u) ? e.b : e.a;
      if (v == u) continue;  // self-loops never improve a path
      Label& lv = labels_[v];
      if (lv.settled) continue;
      // Candidate label along u->v: (cost, hops, path) compared
      // lexicographically. Cost equality is exact; ties in practice are
      // sums of the same edge weights, and the order only has to be
      // deterministic. With equal cost and hops the candidate path is
      // lu.path + v against lv.path, which also ends in v, so the
      // prefixes decide.
      const double cand_cost = lu.cost + edge_cost(e);
      const std::size_t cand_hops = lu.hops + 1;
      if (seen[v]) {
        bool improves = false;
        if (cand_cost != lv.cost) {
          improves = cand_cost < lv.cost;
        } else if (cand_hops != lv.hops) {
          improves = cand_hops < lv.hops;
        } else {
          improves = std::lexicographical_compare(
              lu.path.begin(), lu.path.end(), lv.path.begin(),
              lv.path.end() - 1);
        }
        if (!improves) continue;
      }
      lv.cost = cand_cost;
      lv.hops = cand_hops;
      lv.path = lu.path;
      lv.path.push_back(v);
      seen[v] = true;
      queue.emplace(cand_cost, cand_hops, v);
    }
  }
}

bool ShortestPaths::reachable(NodeId to) const {
  return to < labels_.size() && !labels_[to].path.empty();
}

double ShortestPaths::cost_to(NodeId to) const {
  if (!reachable(to)) {
    throw std::runtime_error("shortest paths: node " + std::to_string(to) +
                             " is unreachable from " + std::to_string(from_));
  }
  return labels_[to].cost;
}

Route ShortestPaths::route_to(NodeId to) const {
  if (!reachable(to)) {
    throw std::runtime_error("shortest paths: node " + std::to_string(to) +
                             " is unreachable from " + std::to_string(from_));
  }
  Route route;
  route.nodes = labels_[to].path;
  for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
    const Edge* e = graph_->find_edge(route.nodes[i], route.nodes[i + 1]);
    if (e == nullptr) {
      throw std::logic_error("shortest paths: route uses a missing edge");
    }
    route.total_cost += edge_cost(*e);
    route.total_distance_km += e->distance_km;
    route.total_time_min += e->time_min;
  }
  return route;
}

Route cheapest_route(const TransportGraph& g, NodeId from, NodeId to) {
  if (to >= g.node_count()) {
    throw std::out_of_range("cheapest_route: bad destination node");
  }
  return ShortestPaths(g, from).route_to(to);
}

std::optional<std::pair<NodeId, Route>> nearest_of_kind(
    const TransportGraph& g, NodeId from, NodeKind want,
    const std::function<bool(const Node&)>& filter) {
  const ShortestPaths paths(g, from);
  std::optional<NodeId> best;
  for (const Node& n : g.nodes()) {
    if (n.kind != want || !filter(n) || !paths.reachable(n.id)) continue;
    if (!best || paths.cost_to(n.id) < paths.cost_to(*best)) best = n.id;
    // Equal costs keep the earlier (smaller) id.
  }
  if (!best) return std::nullopt;
  return std::make_pair(*best, paths.route_to(*best));
}

}  // namespace haul
