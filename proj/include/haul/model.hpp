#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace haul {

using NodeId = std::uint32_t;
/// Goods quantities are whole units; all stock arithmetic is integral.
using Units = std::int64_t;

enum class NodeKind { Store, Warehouse, Joint };

const char* to_string(NodeKind kind);

/// One transportation node. Kind constrains the stock fields: warehouses
/// never have demand, stores never have supply, joints have neither.
struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Joint;
  double x = 0.0;  // km, within [0, map_size]
  double y = 0.0;
  Units supply = 0;
  Units demand = 0;

  bool operator==(const Node&) const = default;
};

/// Undirected road between two nodes. Endpoints are stored normalized
/// (a < b). The velocity used at generation time is kept so the time can
/// be re-derived from the file alone.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  double distance_km = 0.0;
  int velocity_kmh = 0;
  std::int64_t time_min = 0;

  bool operator==(const Edge&) const = default;
};

/// Heuristic weight used for every routing decision: time + distance.
/// The unit mixing (minutes + kilometers) is deliberate.
inline double edge_cost(const Edge& e) {
  return static_cast<double>(e.time_min) + e.distance_km;
}

inline double euclidean_distance(double ax, double ay, double bx, double by) {
  const double dx = ax - bx;
  const double dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

/// Travel time in whole minutes: (distance / velocity) * 60, fraction
/// truncated.
inline std::int64_t travel_time_min(double distance_km, int velocity_kmh) {
  return static_cast<std::int64_t>(distance_km / velocity_kmh * 60.0);
}

/// A problem instance: typed nodes with stock levels plus weighted
/// undirected edges on a square map. Immutable once built; solvers only
/// read it.
class TransportGraph {
 public:
  TransportGraph() = default;
  explicit TransportGraph(double map_size) : map_size_(map_size) {}

  double map_size() const { return map_size_; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }

  /// Appends a node; ids are dense 0..n-1 in creation order.
  NodeId add_node(NodeKind kind, double x, double y, Units supply = 0,
                  Units demand = 0);

  /// Adds an undirected edge. Endpoints must exist (throws
  /// std::out_of_range otherwise); semantic breaches such as self-loops
  /// or duplicate pairs are left to validate().
  void add_edge(Edge e);

  bool has_edge(NodeId a, NodeId b) const;
  const Edge* find_edge(NodeId a, NodeId b) const;

  /// Indices into edges() of all edges incident to `id`.
  const std::vector<std::size_t>& incident_edges(NodeId id) const {
    return adjacency_.at(id);
  }

  Units total_supply() const;
  Units total_demand() const;

  friend bool operator==(const TransportGraph& lhs, const TransportGraph& rhs);

 private:
  double map_size_ = 1000.0;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Current solver state of the single delivery truck.
struct TruckState {
  NodeId position = 0;
  Units load = 0;
  Units max_capacity = 0;
  double threshold = 0.5;  // restock when load < threshold * max_capacity
};

/// Checks every instance invariant and returns one message per breach.
/// Violations are data, not failures; an empty list means a well-formed,
/// connected instance.
std::vector<std::string> validate(const TransportGraph& g);

/// Same checks on raw parts, usable before a TransportGraph can be
/// assembled (e.g. on unvalidated file contents).
std::vector<std::string> validate_parts(double map_size,
                                        std::span<const Node> nodes,
                                        std::span<const Edge> edges);

/// True when every node is reachable from node 0 (vacuously true for
/// empty and single-node graphs).
bool is_connected(const TransportGraph& g);

}  // namespace haul
