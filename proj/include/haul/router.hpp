#pragma once

#include <chrono>
#include <functional>
#include <vector>

#include "haul/model.hpp"
#include "haul/shortest_path.hpp"

namespace haul {

struct SolverParams {
  NodeId start_node = 0;
  Units initial_load = 0;
  Units max_capacity = 0;   // required, >= 1
  double threshold = 0.5;   // T in [0, 1]
};

enum class SegmentKind { Restock, Ship };

/// Which branch of the decision table fired. The first six mirror the
/// rule table (position kind x load side of T*MAX_CAPACITY); the last
/// two cover the endgame corners the table leaves open: shipping out the
/// remaining load once every warehouse is empty, and restocking an empty
/// truck when T = 0 puts it on the ship side.
enum class DecisionRule {
  WarehouseLowRestock,
  JointLowRestock,
  StoreLowRestock,
  WarehouseHighShip,
  JointHighShip,
  StoreHighShip,
  SupplyExhaustedShip,
  EmptyTruckRestock,
};

const char* to_string(SegmentKind kind);
const char* to_string(DecisionRule rule);

/// One decision cycle: the cheapest route to the chosen target plus the
/// transfer performed there. Every recorded segment moves at least one
/// unit.
struct PathSegment {
  SegmentKind kind = SegmentKind::Restock;
  DecisionRule rule = DecisionRule::WarehouseLowRestock;
  Route route;
  NodeId target = 0;
  Units moved_units = 0;
  Units load_after = 0;
  double decision_cost = 0.0;
};

enum class SolveStatus { Complete, Partial };

const char* to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Partial;
  std::vector<PathSegment> segments;
  std::vector<NodeId> full_path;  // concatenated segment routes
  Units delivered_total = 0;
  Units remaining_demand = 0;
  Units remaining_supply = 0;
  Units truck_load_final = 0;
  std::chrono::microseconds elapsed_runtime{0};
  // Solve context, kept so reports can replay the run.
  SolverParams params;
  Units initial_supply = 0;
  Units initial_demand = 0;
};

/// The solver's private mutable view of per-node stock levels; the graph
/// itself is never touched.
class GoodsLedger {
 public:
  explicit GoodsLedger(const TransportGraph& g);

  Units supply_at(NodeId id) const { return supply_.at(id); }
  Units demand_at(NodeId id) const { return demand_.at(id); }
  Units& supply_at(NodeId id) { return supply_.at(id); }
  Units& demand_at(NodeId id) { return demand_.at(id); }
  Units total_supply() const;
  Units total_demand() const;

 private:
  std::vector<Units> supply_;
  std::vector<Units> demand_;
};

/// The next move for the truck in the given state.
struct Decision {
  enum class Action { Restock, Ship, Stop };
  Action action = Action::Stop;
  SolveStatus stop_status = SolveStatus::Complete;  // for Action::Stop
  NodeId target = 0;
  Route route;
  DecisionRule rule = DecisionRule::WarehouseLowRestock;
};

/// Applies the rule table: below T * MAX_CAPACITY the truck heads for
/// the nearest stocked warehouse, otherwise for the nearest demanding
/// store; the current node qualifies at zero cost. Stops Complete when
/// no demand remains; when all warehouses are empty it ships whatever is
/// left on board and stops Partial once the truck is empty too.
Decision decide_next(const TransportGraph& g, const TruckState& truck,
                     const GoodsLedger& ledger);

/// Fills the truck up to capacity from the warehouse, capped by its
/// stock. Returns units moved. Contract breaches (empty warehouse, full
/// truck, wrong node kind) throw std::logic_error.
Units apply_restock(const TransportGraph& g, GoodsLedger& ledger,
                    TruckState& truck, NodeId warehouse);

/// Drops min(load, demand) units at the store. Same contract style as
/// apply_restock.
Units apply_ship(const TransportGraph& g, GoodsLedger& ledger,
                 TruckState& truck, NodeId store);

/// Observer invoked after every applied segment; used by tests to check
/// step-level invariants.
using SegmentObserver = std::function<void(
    const PathSegment&, const GoodsLedger&, const TruckState&)>;

/// Runs the greedy threshold simulation to termination. The graph must
/// be valid and connected and the params well-formed; anything else
/// throws std::invalid_argument before any work starts.
SolveOutcome solve(const TransportGraph& g, const SolverParams& params,
                   const SegmentObserver& on_segment = nullptr);

}  // namespace haul
