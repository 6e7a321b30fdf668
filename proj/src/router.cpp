#include "haul/router.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace haul {

const char* to_string(SegmentKind kind) {
  return kind == SegmentKind::Restock ? "restock" : "ship";
}

const char* to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::WarehouseLowRestock:
      return "at warehouse, load below threshold: restock at nearest stocked warehouse";
    case DecisionRule::JointLowRestock:
      return "at joint, load below threshold: restock at nearest stocked warehouse";
    case DecisionRule::StoreLowRestock:
      return "at store, load below threshold: restock at nearest stocked warehouse";
    case DecisionRule::WarehouseHighShip:
      return "at warehouse, load at or above threshold: ship to nearest demanding store";
    case DecisionRule::JointHighShip:
      return "at joint, load at or above threshold: ship to nearest demanding store";
    case DecisionRule::StoreHighShip:
      return "at store, load at or above threshold: ship to nearest demanding store";
    case DecisionRule::SupplyExhaustedShip:
      return "warehouses exhausted: ship remaining load to nearest demanding store";
    case DecisionRule::EmptyTruckRestock:
      return "empty truck: restock at nearest stocked warehouse";
  }
  return "unknown";
}

const char* to_string(SolveStatus status) {
  return status == SolveStatus::Complete ? "complete" : "partial";
}

GoodsLedger::GoodsLedger(const TransportGraph& g) {
  supply_.reserve(g.node_count());
  demand_.reserve(g.node_count());
  for (const Node& n : g.nodes()) {
    supply_.push_back(n.supply);
    demand_.push_back(n.demand);
  }
}

Units GoodsLedger::total_supply() const {
  Units total = 0;
  for (Units s : supply_) total += s;
  return total;
}

Units GoodsLedger::total_demand() const {
  Units total = 0;
  for (Units d : demand_) total += d;
  return total;
}

namespace {

DecisionRule restock_rule(NodeKind at) {
  switch (at) {
    case NodeKind::Warehouse:
      return DecisionRule::WarehouseLowRestock;
    case NodeKind::Joint:
      return DecisionRule::JointLowRestock;
    case NodeKind::Store:
      return DecisionRule::StoreLowRestock;
  }
  return DecisionRule::JointLowRestock;
}

DecisionRule ship_rule(NodeKind at) {
  switch (at) {
    case NodeKind::Warehouse:
      return DecisionRule::WarehouseHighShip;
    case NodeKind::Joint:
      return DecisionRule::JointHighShip;
    case NodeKind::Store:
      return DecisionRule::StoreHighShip;
  }
  return DecisionRule::JointHighShip;
}

}  // namespace

Decision decide_next(const TransportGraph& g, const TruckState& truck,
                     const GoodsLedger& ledger) {
  Decision decision;
  if (ledger.total_demand() == 0) {
    decision.action = Decision::Action::Stop;
    decision.stop_status = SolveStatus::Complete;
    return decision;
  }

  const NodeKind at = g.node(truck.position).kind;
  const bool below_threshold =
      static_cast<double>(truck.load) <
      truck.threshold * static_cast<double>(truck.max_capacity);

  auto nearest_warehouse = [&] {
    return nearest_of_kind(g, truck.position, NodeKind::Warehouse,
                           [&](const Node& n) {
                             return ledger.supply_at(n.id) > 0;
                           });
  };
  auto nearest_store = [&] {
    return nearest_of_kind(g, truck.position, NodeKind::Store,
                           [&](const Node& n) {
                             return ledger.demand_at(n.id) > 0;
                           });
  };

  // A target is only eligible when the visit would actually move goods;
  // zero-unit segments would stall the simulation.
  const bool can_ship = truck.load > 0;
  const bool can_restock = truck.load < truck.max_capacity;

  if (below_threshold) {
    if (can_restock) {
      if (auto found = nearest_warehouse()) {
        decision.action = Decision::Action::Restock;
        decision.rule = restock_rule(at);
        decision.target = found->first;
        decision.route = std::move(found->second);
        return decision;
      }
    }
    // No stocked warehouse left: keep delivering what is on board.
    if (can_ship) {
      auto found = nearest_store();  // demand > 0 guarantees a candidate
      decision.action = Decision::Action::Ship;
      decision.rule = DecisionRule::SupplyExhaustedShip;
      decision.target = found->first;
      decision.route = std::move(found->second);
      return decision;
    }
  } else {
    if (can_ship) {
      auto found = nearest_store();
      decision.action = Decision::Action::Ship;
      decision.rule = ship_rule(at);
      decision.target = found->first;
      decision.route = std::move(found->second);
      return decision;
    }
    // Load is at or above T * MAX_CAPACITY yet the truck is empty; only
    // possible with T = 0. Restock if anyone still has stock.
    if (can_restock) {
      if (auto found = nearest_warehouse()) {
        decision.action = Decision::Action::Restock;
        decision.rule = DecisionRule::EmptyTruckRestock;
        decision.target = found->first;
        decision.route = std::move(found->second);
        return decision;
      }
    }
  }

  // Demand remains but every deliverable unit is gone.
  decision.action = Decision::Action::Stop;
  decision.stop_status = SolveStatus::Partial;
  return decision;
}

Units apply_restock(const TransportGraph& g, GoodsLedger& ledger,
                    TruckState& truck, NodeId warehouse) {
  if (g.node(warehouse).kind != NodeKind::Warehouse) {
    throw std::logic_error("apply_restock: target is not a warehouse");
  }
  if (ledger.supply_at(warehouse) <= 0) {
    throw std::logic_error("apply_restock: warehouse has no supply");
  }
  if (truck.load >= truck.max_capacity) {
    throw std::logic_error("apply_restock: truck already full");
  }
  const Units moved =
      std::min(truck.max_capacity - truck.load, ledger.supply_at(warehouse));
  ledger.supply_at(warehouse) -= moved;
  truck.load += moved;
  return moved;
}

Units apply_ship(const TransportGraph& g, GoodsLedger& ledger,
                 TruckState& truck, NodeId store) {
  if (g.node(store).kind != NodeKind::Store) {
    throw std::logic_error("apply_ship: target is not a store");
  }
  if (ledger.demand_at(store) <= 0) {
    throw std::logic_error("apply_ship: store has no demand");
  }
  if (truck.load <= 0) {
    throw std::logic_error("apply_ship: truck is empty");
  }
  const Units moved = std::min(truck.load, ledger.demand_at(store));
  ledger.demand_at(store) -= moved;
  truck.load -= moved;
  return moved;
}

SolveOutcome solve(const TransportGraph& g, const SolverParams& params,
                   const SegmentObserver& on_segment) {
  auto fail = [](const std::string& message) {
    throw std::invalid_argument("solve: " + message);
  };
  if (g.node_count() == 0) fail("graph has no nodes");
  if (params.start_node >= g.node_count()) fail("start_node does not exist");
  if (params.max_capacity < 1) fail("max_capacity must be at least 1");
  if (params.initial_load < 0 || params.initial_load > params.max_capacity) {
    fail("initial_load must lie in [0, max_capacity]");
  }
  if (!(params.threshold >= 0.0 && params.threshold <= 1.0)) {
    fail("threshold must lie in [0, 1]");
  }
  {
    const std::vector<std::string> violations = validate(g);
    if (!violations.empty()) fail("invalid instance: " + violations.front());
  }

  const auto started = std::chrono::steady_clock::now();

  SolveOutcome outcome;
  outcome.params = params;
  outcome.initial_supply = g.total_supply();
  outcome.initial_demand = g.total_demand();

  GoodsLedger ledger(g);
  TruckState truck{params.start_node, params.initial_load, params.max_capacity,
                   params.threshold};
  outcome.full_path.push_back(truck.position);

  // Every segment moves at least one unit out of a warehouse or into a
  // store, so this bound is exact.
  const Units max_segments = outcome.initial_supply + outcome.initial_demand;

  for (;;) {
    Decision decision = decide_next(g, truck, ledger);
    if (decision.action == Decision::Action::Stop) {
      outcome.status = decision.stop_status;
      break;
    }
    if (static_cast<Units>(outcome.segments.size()) >= max_segments) {
      throw std::logic_error("solve: progress violation, segment budget spent");
    }

    truck.position = decision.target;
    outcome.full_path.insert(outcome.full_path.end(),
                             decision.route.nodes.begin() + 1,
                             decision.route.nodes.end());

    PathSegment segment;
    segment.rule = decision.rule;
    segment.target = decision.target;
    segment.decision_cost = decision.route.total_cost;
    if (decision.action == Decision::Action::Restock) {
      segment.kind = SegmentKind::Restock;
      segment.moved_units = apply_restock(g, ledger, truck, decision.target);
    } else {
      segment.kind = SegmentKind::Ship;
      segment.moved_units = apply_ship(g, ledger, truck, decision.target);
      outcome.delivered_total += segment.moved_units;
    }
    segment.load_after = truck.load;
    segment.route = std::move(decision.route);
    if (segment.moved_units < 1) {
      throw std::logic_error("solve: progress violation, zero-unit segment");
    }
    outcome.segments.push_back(std::move(segment));
    if (on_segment) on_segment(outcome.segments.back(), ledger, truck);
  }

  outcome.remaining_demand = ledger.total_demand();
  outcome.remaining_supply = ledger.total_supply();
  outcome.truck_load_final = truck.load;
  outcome.elapsed_runtime =
      std::chrono::duration_cast<std::chrono::microseconds>(
          std::chrono::steady_clock::now() - started);
  return outcome;
}

}  // namespace haul
