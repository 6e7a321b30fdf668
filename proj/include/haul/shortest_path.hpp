#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "haul/model.hpp"

namespace haul {

/// A concrete walk from an origin to a destination. A route from a node
/// to itself is the single-node sequence with zero totals.
struct Route {
  std::vector<NodeId> nodes;
  double total_cost = 0.0;
  double total_distance_km = 0.0;
  std::int64_t total_time_min = 0;

  bool operator==(const Route&) const = default;
};

/// Single-source least-cost labels under the time+distance edge weight.
/// Ties are resolved deterministically: fewer hops first, then the
/// lexicographically smallest node-id sequence.
class ShortestPaths {
 public:
  ShortestPaths(const TransportGraph& g, NodeId from);

  NodeId origin() const { return from_; }
  bool reachable(NodeId to) const;
  double cost_to(NodeId to) const;

  /// Materializes the route to `to`, recomputing the distance/time/cost
  /// totals from the graph's edges. Throws std::runtime_error when `to`
  /// is unreachable.
  Route route_to(NodeId to) const;

 private:
  struct Label {
    double cost = 0.0;
    std::size_t hops = 0;
    std::vector<NodeId> path;
    bool settled = false;
  };

  const TransportGraph* graph_;
  NodeId from_;
  std::vector<Label> labels_;
};

/// Minimum-cost route between two nodes.
Route cheapest_route(const TransportGraph& g, NodeId from, NodeId to);

/// The node of the wanted kind, satisfying `filter`, with the cheapest
/// route from `from`; cost ties fall to the smallest node id. The origin
/// itself qualifies at zero cost. Empty when no node qualifies.
std::optional<std::pair<NodeId, Route>> nearest_of_kind(
    const TransportGraph& g, NodeId from, NodeKind want,
    const std::function<bool(const Node&)>& filter);

}  // namespace haul
