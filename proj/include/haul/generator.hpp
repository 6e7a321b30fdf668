#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "haul/model.hpp"
#include "haul/rng.hpp"

namespace haul {

/// Everything the instance generator needs. Defaults mirror the worked
/// reference configuration: a 12-node map with 2 warehouses, 4 stores,
/// supply 100 against demand 90, and highway-to-city velocities.
struct GeneratorParams {
  std::size_t total_nodes = 12;
  std::size_t max_edges_per_node = 2;
  std::size_t num_stores = 4;
  std::size_t num_warehouses = 2;
  int good_types = 1;  // single-commodity only
  Units total_supply = 100;
  Units total_demand = 90;
  double map_size = 1000.0;
  int velocity_min = 40;  // km/h
  int velocity_max = 100;
  std::uint64_t seed = 0;
};

/// Builds a connected instance, a pure function of the parameters
/// including the seed. Draws happen in one fixed order so the stream is
/// stable: kind permutation, per-node coordinates in id order, then edge
/// spreading in id order, then connectivity bridges. Goods allocation is
/// round-robin and consumes no randomness.
/// Throws std::invalid_argument on parameter breaches.
TransportGraph generate(const GeneratorParams& params);

/// Splits `total` over `bins` by single-unit round-robin starting at bin
/// 0; any two bins differ by at most one unit. total > 0 with bins == 0
/// throws std::invalid_argument.
std::vector<Units> allocate_goods(Units total, std::size_t bins);

/// Per node in id order, up to max_edges_per_node attempts, each gated
/// by a fair coin; destinations drawn uniformly among the other nodes,
/// duplicates redrawn up to total_nodes - 1 times then dropped. A node
/// whose attempts all produced nothing gets one forced edge.
void spread_edges(TransportGraph& g, const GeneratorParams& params,
                  Xoshiro256StarStar& rng);

/// Draws an integer velocity uniformly from [velocity_min, velocity_max]
/// and derives the truncated travel time. Returns {time_min, velocity}.
std::pair<std::int64_t, int> sample_time(double distance_km, int velocity_min,
                                         int velocity_max,
                                         Xoshiro256StarStar& rng);

/// Bridges components until the graph is connected, always joining the
/// geometrically closest pair of nodes lying in different components.
/// Idempotent on connected graphs.
void ensure_connected(TransportGraph& g, int velocity_min, int velocity_max,
                      Xoshiro256StarStar& rng);

}  // namespace haul
