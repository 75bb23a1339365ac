#pragma once

#include <stdexcept>
#include <string>

namespace flowround {

// Error codes double as the CLI exit-code taxonomy:
// parse/usage-class errors exit 2, verification failures exit 1,
// broken internal invariants exit 3.
enum class Errc {
  parse,
  usage,
  missing_costs,
  not_a_circulation,
  not_a_flow,
  no_protected_edge,
  graph_mismatch,
  same_tree,
  no_such_edge,
  not_connected,
  same_node,
  negative_availability,
  degenerate_cycle,
  out_of_range,
  branch_budget,
  invalid_k,
  infeasible,
  verification,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::verification:
      return 1;
    case Errc::internal:
    case Errc::same_tree:
    case Errc::no_such_edge:
    case Errc::not_connected:
    case Errc::same_node:
    case Errc::negative_availability:
    case Errc::degenerate_cycle:
      return 3;
    default:
      return 2;
  }
}

}  // namespace flowround
