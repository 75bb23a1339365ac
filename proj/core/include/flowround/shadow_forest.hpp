#pragma once

#include <map>
#include <vector>

#include "flowround/cost_value.hpp"
#include "flowround/linkcut.hpp"
#include "flowround/rational.hpp"

namespace flowround {

// Explicit parent-array forest that walks paths node by node. Same public
// contract as DynTree, including the eversion side effects, so any random
// operation sequence must agree between the two on every result. Used only
// as the differential oracle.
class ShadowForest {
 public:
  explicit ShadowForest(int node_count);

  void link(int u, int v, const DynTree::EdgePayload& payload);
  DynTree::EdgePayload cut(int u, int v);
  int find_root(int v) const;
  bool connected(int u, int v) const;

  void path_add(int u, int v, const Rational& delta);
  DynTree::PathMinResult path_min(int u, int v);
  CostValue path_sum(int u, int v);

  const std::vector<std::pair<int, int>>& edges() const { return edge_list_; }

 private:
  struct Edge {
    int edge_id;
    int u, v;  // link-time order
    Rational avail_uv, avail_vu;
    CostValue cost_uv;
  };

  struct Step {
    int from, to;
    std::map<std::pair<int, int>, Edge>::iterator edge;
  };

  void reroot(int v);
  std::vector<Step> walk(int u, int v);  // path u -> v after rerooting at u

  int node_count_;
  std::vector<int> parent_;
  std::map<std::pair<int, int>, Edge> edges_;
  std::vector<std::pair<int, int>> edge_list_;
};

}  // namespace flowround
