#include "flowround/flow_state.hpp"

#include <ostream>

#include "flowround/errors.hpp"

namespace flowround {

FlowState::FlowState(Graph g, std::vector<Rational> flows,
                     std::optional<std::vector<CostValue>> costs)
    : graph(std::move(g)), f0(flows), f1(std::move(flows)), cost(std::move(costs)) {
  if (f0.size() != static_cast<size_t>(graph.edge_count()))
    fail(Errc::internal, "flow vector does not match edge count");
  if (cost && cost->size() != f0.size())
    fail(Errc::internal, "cost vector does not match edge count");
  is_protected.assign(f0.size(), 0);
}

Rational availability(const FlowState& state, DirectedEdgeRef e) {
  Rational f0d = state.directed_flow(e, FlowKind::original);
  Rational f1d = state.directed_flow(e, FlowKind::working);
  return f0d.ceil() - f1d;
}

std::vector<Rational> net_flows(const FlowState& state, FlowKind which) {
  std::vector<Rational> net(state.graph.node_count);
  for (int e = 0; e < state.graph.edge_count(); ++e) {
    const auto& ed = state.graph.edges[e];
    if (ed.tail == ed.head) continue;
    const Rational& f = state.flow(e, which);
    net[ed.head] += f;
    net[ed.tail] -= f;
  }
  return net;
}

Rational net_flow(const FlowState& state, int v, FlowKind which) {
  if (v < 0 || v >= state.graph.node_count) fail(Errc::usage, "node id out of range");
  Rational net;
  for (int e = 0; e < state.graph.edge_count(); ++e) {
    const auto& ed = state.graph.edges[e];
    if (ed.tail == ed.head) continue;
    if (ed.head == v) net += state.flow(e, which);
    if (ed.tail == v) net -= state.flow(e, which);
  }
  return net;
}

bool is_circulation(const FlowState& state, FlowKind which) {
  for (const Rational& x : net_flows(state, which))
    if (!x.is_zero()) return false;
  return true;
}

std::set<int> fractional_edges(const FlowState& state) {
  std::set<int> out;
  for (int e = 0; e < state.graph.edge_count(); ++e)
    if (!state.f1[e].is_integral()) out.insert(e);
  return out;
}

CostValue total_cost(const FlowState& state, FlowKind which) {
  if (!state.cost) fail(Errc::missing_costs, "total_cost on a state without costs");
  CostValue total;
  for (int e = 0; e < state.graph.edge_count(); ++e) total += (*state.cost)[e] * state.flow(e, which);
  return total;
}

}  // namespace flowround
