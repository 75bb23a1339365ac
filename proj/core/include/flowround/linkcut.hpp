#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flowround/cost_value.hpp"
#include "flowround/rational.hpp"

namespace flowround {

// Dynamic forest of rooted trees with per-edge payloads: availabilities in
// both directions plus a per-unit cost. Supports link, cut, root finding and
// path add/min/sum, each amortized logarithmic in the tree size.
//
// Eversion contract (the internal reroots are observable through find_root):
//   - link(u, v, ..)  reroots v's tree at v, then hangs it under u; the root
//     of u's tree is unchanged.
//   - cut(u, v)       leaves u and v as the roots of their two pieces.
//   - path_add/path_min/path_sum(u, v) leave u as the root of the tree.
//   - find_root has no side effect on the represented root.
//
// path_add(u, v, d) models pushing d units of flow from u to v: every edge
// on the path loses d availability in the u->v direction and gains d in the
// opposite direction. The check that no availability goes negative is always
// on; it is the guarantee the rounding algorithms lean on.
class DynTree {
 public:
  struct EdgePayload {
    int edge_id = -1;
    Rational avail_uv;   // availability in the u->v direction of the call
    Rational avail_vu;   // availability in the v->u direction
    CostValue cost_uv;   // per-unit cost in the u->v direction
  };

  struct PathMinResult {
    int edge_id = -1;
    Rational value;
    // True when the u->v walk crosses the edge in the same direction it was
    // linked with (first link argument towards the second).
    bool traversed_forward = true;
    int near_node = -1;  // endpoint of the edge closer to u
    int far_node = -1;   // endpoint closer to v
  };

  explicit DynTree(int node_count);

  int node_count() const { return node_count_; }

  void link(int u, int v, const EdgePayload& payload);
  EdgePayload cut(int u, int v);
  int find_root(int v);
  bool connected(int u, int v);
  bool has_edge(int u, int v) const;

  void path_add(int u, int v, const Rational& delta);
  PathMinResult path_min(int u, int v);
  CostValue path_sum(int u, int v);

  // Reroots the represented tree at v.
  void evert(int v);

  // Instrumentation: public operations and primitive splay rotations.
  std::uint64_t op_count() const { return ops_; }
  std::uint64_t rotation_count() const { return rotations_; }
  void reset_counters() { ops_ = rotations_ = 0; }

  int stored_edge_count() const { return static_cast<int>(edge_by_pair_.size()); }

  // Deliberately breaks one aggregate so the differential suite can prove it
  // notices. Never called outside tests.
  void corrupt_aggregate_for_testing(int u, int v);

 private:
  struct DirAgg {
    bool has = false;
    Rational min;
    int first = -1;  // in-order-first edge node attaining min
    int last = -1;   // in-order-last edge node attaining min
  };

  struct Node {
    int parent = -1;
    int child[2] = {-1, -1};
    bool flip = false;
    Rational pend;

    bool is_edge = false;
    int edge_id = -1;
    int link_u = -1, link_v = -1;
    bool fwd = true;  // in-order ("with") direction equals link_u -> link_v
    Rational avail_with, avail_against;
    CostValue cost_with;

    DirAgg agg_with, agg_against;
    CostValue cost_sum;  // over the subtree, in the "with" direction
  };

  bool is_splay_root(int x) const;
  void apply_add(int x, const Rational& d);
  void apply_flip(int x);
  void push_down(int x);
  void pull_up(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);
  int find_root_internal(int v);
  // Everts u and exposes the u..v path; returns the splay root carrying the
  // path aggregate, or -1 when u and v are not connected.
  int expose_path(int u, int v);
  int alloc_edge_node();
  void check_node(int v) const;
  static std::uint64_t pair_key(int u, int v);

  int node_count_;
  std::vector<Node> nodes_;
  std::vector<int> free_;
  std::unordered_map<std::uint64_t, int> edge_by_pair_;
  std::uint64_t ops_ = 0;
  std::uint64_t rotations_ = 0;
};

}  // namespace flowround
