#pragma once

#include <optional>
#include <set>
#include <vector>

#include "flowround/cost_value.hpp"
#include "flowround/graph.hpp"
#include "flowround/rational.hpp"

namespace flowround {

enum class FlowKind { original, working };

// A circulation being rounded: the fixed original flow f0, the working flow
// f1 the algorithms mutate, optional per-edge costs, and the protected flag
// for the edge added by the flow->circulation reduction.
struct FlowState {
  Graph graph;
  std::vector<Rational> f0;
  std::vector<Rational> f1;
  std::optional<std::vector<CostValue>> cost;
  std::vector<char> is_protected;

  FlowState() = default;
  FlowState(Graph g, std::vector<Rational> flows, std::optional<std::vector<CostValue>> costs = {});

  bool costed() const { return cost.has_value(); }
  const Rational& flow(int edge_id, FlowKind which) const {
    return which == FlowKind::original ? f0[edge_id] : f1[edge_id];
  }

  // Signed flow along the given direction of an edge (antisymmetric values;
  // only the forward value is stored).
  Rational directed_flow(DirectedEdgeRef e, FlowKind which) const {
    const Rational& f = flow(e.edge_id, which);
    return e.forward ? f : -f;
  }
};

// ceil(f0 in direction) - f1 in direction: the amount of flow pushable along
// the direction before the working flow turns integral.
Rational availability(const FlowState& state, DirectedEdgeRef e);

// Sum of incoming minus outgoing flow at node v; self-loops contribute zero.
Rational net_flow(const FlowState& state, int v, FlowKind which);

// Net flow at every node at once (one pass over the edges).
std::vector<Rational> net_flows(const FlowState& state, FlowKind which);

bool is_circulation(const FlowState& state, FlowKind which);

// Edge ids whose working flow is non-integral.
std::set<int> fractional_edges(const FlowState& state);

// Exact total cost; throws missing_costs when the state carries no costs.
CostValue total_cost(const FlowState& state, FlowKind which);

}  // namespace flowround
