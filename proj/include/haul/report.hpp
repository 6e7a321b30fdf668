#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "haul/router.hpp"

namespace haul {

/// One solver step as shown in the human log, replayed from the
/// outcome's segments. Step indices start at 1.
struct LogEntry {
  std::size_t step = 0;
  NodeId position = 0;  // where the truck decided, before moving
  Units load_before = 0;
  Units load_after = 0;
  DecisionRule rule = DecisionRule::WarehouseLowRestock;
  SegmentKind kind = SegmentKind::Restock;
  NodeId target = 0;
  std::vector<NodeId> route_nodes;
  Units moved_units = 0;
  double decision_cost = 0.0;
  Units remaining_supply = 0;  // after the transfer
  Units remaining_demand = 0;
};

std::vector<LogEntry> build_log_entries(const SolveOutcome& outcome);

/// Self-explanatory run log: one block per decision plus a footer with
/// the full path, final status, totals, and runtime. Costs are quoted to
/// one decimal place.
std::string render_log(const SolveOutcome& outcome);

/// Line-oriented machine form: one `segment` record per step and one
/// `summary` record, space-separated key=value fields, numerics at full
/// precision.
std::string render_structured(const SolveOutcome& outcome);

struct StructuredSummary {
  std::string status;
  std::int64_t segments = 0;
  Units delivered = 0;
  double total_cost = 0.0;
  Units remaining_supply = 0;
  Units remaining_demand = 0;
  Units truck_load = 0;
  std::int64_t runtime_us = 0;

  bool operator==(const StructuredSummary&) const = default;
};

/// Reads the `summary` record back out of render_structured output.
/// Throws std::invalid_argument when no well-formed summary is present.
StructuredSummary parse_structured_summary(std::string_view text);

/// The instance document with every traversed edge annotated with its
/// traversal count and the segment kinds that used it, for external
/// visualizers. Untraversed edges are emitted untouched.
std::string render_solution_dot(const TransportGraph& g,
                                const SolveOutcome& outcome);

}  // namespace haul
