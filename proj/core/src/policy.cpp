#include "flowround/policy.hpp"

#include "flowround/errors.hpp"

namespace flowround {

bool choose_costed(const CostValue& cycle_cost_forward) {
  return cycle_cost_forward <= CostValue();
}

Rational forward_probability(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0)
    fail(Errc::degenerate_cycle, "cycle availabilities must both be positive");
  return b / (a + b);
}

bool bernoulli(const Rational& p, RngState& rng) {
  if (p.sign() < 0 || p > Rational(1)) fail(Errc::out_of_range, "probability outside [0, 1]");
  if (p.is_zero()) return false;
  if (p == Rational(1)) return true;
  return rng.below(p.den()) < p.num();
}

CancelDecision CostedPolicy::decide(const std::optional<CostValue>& cost_fwd, const Rational& a,
                                    const Rational& b) {
  if (!cost_fwd) fail(Errc::missing_costs, "costed policy needs a cycle cost");
  if (a.sign() <= 0 || b.sign() <= 0)
    fail(Errc::degenerate_cycle, "cycle availabilities must both be positive");
  bool fwd = choose_costed(*cost_fwd);
  return {fwd, fwd ? a : b};
}

CancelDecision RandomizedPolicy::decide(const std::optional<CostValue>&, const Rational& a,
                                        const Rational& b) {
  bool fwd = bernoulli(forward_probability(a, b), rng_);
  return {fwd, fwd ? a : b};
}

CancelDecision ScriptedPolicy::decide(const std::optional<CostValue>&, const Rational& a,
                                      const Rational& b) {
  probs_.push_back(forward_probability(a, b));
  bool fwd = taken_.size() < script_.size() ? script_[taken_.size()] : false;
  taken_.push_back(fwd);
  return {fwd, fwd ? a : b};
}

std::unique_ptr<CyclePolicy> make_policy(Mode mode, std::uint64_t seed) {
  if (mode == Mode::costed) return std::make_unique<CostedPolicy>();
  return std::make_unique<RandomizedPolicy>(seed);
}

FlowState circulation_from_flow(const FlowState& state, int s, int t, Mode mode) {
  if (s < 0 || s >= state.graph.node_count || t < 0 || t >= state.graph.node_count || s == t)
    fail(Errc::usage, "bad source/sink");

  auto net = net_flows(state, FlowKind::original);
  for (int v = 0; v < state.graph.node_count; ++v) {
    if (v == s || v == t) continue;
    if (!net[v].is_zero()) fail(Errc::not_a_flow, "net flow nonzero away from source and sink");
  }
  Rational value = net[t];
  if ((net[s] + value).sign() != 0) fail(Errc::not_a_flow, "source deficit does not match sink excess");
  if (value.sign() < 0) fail(Errc::not_a_flow, "negative flow value; swap source and sink");

  FlowState out = state;
  int e = out.graph.add_edge(t, s);
  out.f0.push_back(value);
  out.f1.push_back(value);
  out.is_protected.push_back(1);
  if (out.cost) out.cost->push_back(mode == Mode::costed ? CostValue(Rational(-1), Rational(0))
                                                         : CostValue());
  (void)e;
  return out;
}

FlowState flow_from_circulation(const FlowState& state) {
  int found = -1;
  int count = 0;
  for (size_t e = 0; e < state.is_protected.size(); ++e)
    if (state.is_protected[e]) {
      found = static_cast<int>(e);
      ++count;
    }
  if (count != 1) fail(Errc::no_protected_edge, "expected exactly one protected edge");
  if (found != state.graph.edge_count() - 1)
    fail(Errc::internal, "protected edge must be the last edge");

  FlowState out = state;
  out.graph.edges.pop_back();
  out.f0.pop_back();
  out.f1.pop_back();
  out.is_protected.pop_back();
  if (out.cost) out.cost->pop_back();
  return out;
}

}  // namespace flowround
