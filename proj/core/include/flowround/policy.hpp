#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flowround/flow_state.hpp"
#include "flowround/rng.hpp"

namespace flowround {

enum class Mode { costed, randomized };

// Direction and amount for one cycle cancellation. `forward` refers to the
// cycle orientation fixed by the calling algorithm; amount is always the
// chosen direction's cycle availability.
struct CancelDecision {
  bool forward = true;
  Rational amount;
};

// Costed direction rule: cancel forward exactly when the forward cycle cost
// is non-positive. Zero-cost cycles go forward so runs are reproducible.
bool choose_costed(const CostValue& cycle_cost_forward);

// b/(a+b): the forward-cancel probability that preserves each edge's
// expected flow, where a and b are the forward and backward availabilities.
Rational forward_probability(const Rational& a, const Rational& b);

// Exact Bernoulli draw: uniform integer below the denominator, compared to
// the numerator. No floating point anywhere, so Pr[true] is exactly p.
bool bernoulli(const Rational& p, RngState& rng);

// How an algorithm asks for a cancellation direction. One implementation per
// rounding mode plus a scripted one that the expectation oracle uses to walk
// the whole decision tree.
class CyclePolicy {
 public:
  virtual ~CyclePolicy() = default;
  virtual CancelDecision decide(const std::optional<CostValue>& cycle_cost_forward,
                                const Rational& avail_forward, const Rational& avail_backward) = 0;
  virtual bool costed() const = 0;
};

class CostedPolicy : public CyclePolicy {
 public:
  CancelDecision decide(const std::optional<CostValue>& cost_fwd, const Rational& a,
                        const Rational& b) override;
  bool costed() const override { return true; }
};

class RandomizedPolicy : public CyclePolicy {
 public:
  explicit RandomizedPolicy(std::uint64_t seed) : rng_(seed) {}
  CancelDecision decide(const std::optional<CostValue>&, const Rational& a,
                        const Rational& b) override;
  bool costed() const override { return false; }

 private:
  RngState rng_;
};

// Replays a fixed prefix of forward/backward choices and answers "backward"
// past the end, recording every forward probability it was offered. Runs of
// the same algorithm under different scripts enumerate the decision tree.
class ScriptedPolicy : public CyclePolicy {
 public:
  explicit ScriptedPolicy(std::vector<bool> script) : script_(std::move(script)) {}
  CancelDecision decide(const std::optional<CostValue>&, const Rational& a,
                        const Rational& b) override;
  bool costed() const override { return false; }

  const std::vector<bool>& taken() const { return taken_; }
  const std::vector<Rational>& forward_probs() const { return probs_; }

 private:
  std::vector<bool> script_;
  std::vector<bool> taken_;
  std::vector<Rational> probs_;
};

std::unique_ptr<CyclePolicy> make_policy(Mode mode, std::uint64_t seed);

// Adds the sink->source edge that turns an s-t flow into a circulation. The
// edge is protected and, in costed mode, carries one unit of minus-infinity
// cost per unit of flow so rounding can only keep or raise the s-t value.
FlowState circulation_from_flow(const FlowState& state, int s, int t, Mode mode);

// Strips the protected edge again; the remaining working flow is an s-t flow
// whose value is the rounded protected-edge flow.
FlowState flow_from_circulation(const FlowState& state);

}  // namespace flowround
