#include "haul/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace haul {

namespace {

void check_params(const GeneratorParams& p) {
  auto fail = [](const std::string& message) {
    throw std::invalid_argument("generator: " + message);
  };
  if (p.total_nodes == 0) fail("total_nodes must be at least 1");
  if (p.max_edges_per_node == 0) fail("max_edges_per_node must be at least 1");
  if (p.num_stores + p.num_warehouses > p.total_nodes) {
    fail("num_stores + num_warehouses exceeds total_nodes");
  }
  if (p.good_types != 1) fail("only one good type is supported");
  if (p.total_supply < 0) fail("total_supply must be non-negative");
  if (p.total_demand < 0) fail("total_demand must be non-negative");
  if (p.total_supply > 0 && p.num_warehouses == 0) {
    fail("positive total_supply needs at least one warehouse");
  }
  if (p.total_demand > 0 && p.num_stores == 0) {
    fail("positive total_demand needs at least one store");
  }
  if (p.map_size <= 0.0) fail("map_size must be positive");
  if (p.velocity_min <= 0 || p.velocity_max <= 0) {
    fail("velocities must be positive");
  }
  if (p.velocity_min > p.velocity_max) {
    fail("velocity_min must not exceed velocity_max");
  }
}

/// One edge-creation try from `src`: draw a destination among the other
/// nodes, redrawing on already-present pairs up to total_nodes - 1 extra
/// times. Returns true when an edge was added.
bool try_spread_one(TransportGraph& g, NodeId src, const GeneratorParams& p,
                    Xoshiro256StarStar& rng) {
  const std::size_t n = g.node_count();
  if (n < 2) return false;
  for (std::size_t draw = 0; draw < n; ++draw) {
    const std::uint64_t pick = rng.uniform_u64(n - 1);
    const NodeId dest =
        static_cast<NodeId>(pick >= src ? pick + 1 : pick);  // skip src itself
    if (g.has_edge(src, dest)) continue;
    const Node& from = g.node(src);
    const Node& to = g.node(dest);
    const double distance = euclidean_distance(from.x, from.y, to.x, to.y);
    const auto [time, velocity] =
        sample_time(distance, p.velocity_min, p.velocity_max, rng);
    g.add_edge(Edge{src, dest, distance, velocity, time});
    return true;
  }
  return false;
}

std::vector<int> component_labels(const TransportGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (NodeId start = 0; start < n; ++start) {
    if (label[start] != -1) continue;
    std::vector<NodeId> stack{start};
    label[start] = next;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (std::size_t index : g.incident_edges(u)) {
        const Edge& e = g.edges()[index];
        const NodeId v = (e.a == u) ? e.b : e.a;
        if (label[v] == -1) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

std::vector<Units> allocate_goods(Units total, std::size_t bins) {
  if (total < 0) throw std::invalid_argument("allocate_goods: negative total");
  if (total > 0 && bins == 0) {
    throw std::invalid_argument("allocate_goods: no bins for a positive total");
  }
  std::vector<Units> amounts(bins, 0);
  // Round-robin, one unit at a time from bin 0; equivalent closed form.
  if (bins > 0) {
    const Units base = total / static_cast<Units>(bins);
    const Units extra = total % static_cast<Units>(bins);
    for (std::size_t i = 0; i < bins; ++i) {
      amounts[i] = base + (static_cast<Units>(i) < extra ? 1 : 0);
    }
  }
  return amounts;
}

std::pair<std::int64_t, int> sample_time(double distance_km, int velocity_min,
                                         int velocity_max,
                                         Xoshiro256StarStar& rng) {
  const int velocity =
      static_cast<int>(rng.uniform_int(velocity_min, velocity_max));
  return {travel_time_min(distance_km, velocity), velocity};
}

void spread_edges(TransportGraph& g, const GeneratorParams& params,
                  Xoshiro256StarStar& rng) {
  const std::size_t n = g.node_count();
  if (n < 2) return;
  for (NodeId src = 0; src < n; ++src) {
    bool created = false;
    for (std::size_t attempt = 0; attempt < params.max_edges_per_node;
         ++attempt) {
      if (!rng.coin_flip()) continue;  // 50% chance per attempt
      if (try_spread_one(g, src, params, rng)) created = true;
    }
    if (!created) try_spread_one(g, src, params, rng);  // at least one edge
  }
}

void ensure_connected(TransportGraph& g, int velocity_min, int velocity_max,
                      Xoshiro256StarStar& rng) {
  const std::size_t n = g.node_count();
  if (n < 2) return;
  for (;;) {
    const std::vector<int> label = component_labels(g);
    if (std::all_of(label.begin(), label.end(),
                    [](int c) { return c == 0; })) {
      return;
    }
    // Closest cross-component pair; ties fall to the smaller id pair.
    double best = std::numeric_limits<double>::infinity();
    NodeId best_a = 0;
    NodeId best_b = 0;
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        if (label[a] == label[b]) continue;
        const Node& na = g.node(a);
        const Node& nb = g.node(b);
        const double d = euclidean_distance(na.x, na.y, nb.x, nb.y);
        if (d < best) {
          best = d;
          best_a = a;
          best_b = b;
        }
      }
    }
    const auto [time, velocity] =
        sample_time(best, velocity_min, velocity_max, rng);
    g.add_edge(Edge{best_a, best_b, best, velocity, time});
  }
}

TransportGraph generate(const GeneratorParams& params) {
  check_params(params);
  Xoshiro256StarStar rng(params.seed);
  const std::size_t n = params.total_nodes;

  // Kind assignment: shuffle the id range, first slots become warehouses,
  // the next ones stores, everything else stays a joint.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_u64(i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<NodeKind> kinds(n, NodeKind::Joint);
  std::size_t slot = 0;
  for (std::size_t i = 0; i < params.num_warehouses; ++i) {
    kinds[order[slot++]] = NodeKind::Warehouse;
  }
  for (std::size_t i = 0; i < params.num_stores; ++i) {
    kinds[order[slot++]] = NodeKind::Store;
  }

  // Stocks: round-robin over warehouses and stores in id order. Consumes
  // no randomness, so it can precede node creation in the stream.
  const std::vector<Units> supplies =
      allocate_goods(params.total_supply, params.num_warehouses);
  const std::vector<Units> demands =
      allocate_goods(params.total_demand, params.num_stores);

  TransportGraph g(params.map_size);
  std::size_t warehouse_index = 0;
  std::size_t store_index = 0;
  for (NodeId id = 0; id < n; ++id) {
    const double x = rng.uniform_real(0.0, params.map_size);
    const double y = rng.uniform_real(0.0, params.map_size);
    Units supply = 0;
    Units demand = 0;
    if (kinds[id] == NodeKind::Warehouse) supply = supplies[warehouse_index++];
    if (kinds[id] == NodeKind::Store) demand = demands[store_index++];
    g.add_node(kinds[id], x, y, supply, demand);
  }

  spread_edges(g, params, rng);
  ensure_connected(g, params.velocity_min, params.velocity_max, rng);

  const std::vector<std::string> violations = validate(g);
  if (!violations.empty()) {
    throw std::logic_error("generate produced an invalid graph: " +
                           violations.front());
  }
  return g;
}

}  // namespace haul
