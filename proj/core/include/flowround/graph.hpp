#pragma once

#include <vector>

namespace flowround {

// Directed multigraph. Parallel edges and self-loops are allowed and are
// distinguished by their dense edge id (0..m-1); node ids are 0..n-1.
struct Graph {
  struct Edge {
    int tail = 0;
    int head = 0;
  };

  int node_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  int add_edge(int tail, int head) {
    edges.push_back({tail, head});
    return edge_count() - 1;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.node_count != b.node_count || a.edges.size() != b.edges.size()) return false;
    for (size_t i = 0; i < a.edges.size(); ++i)
      if (a.edges[i].tail != b.edges[i].tail || a.edges[i].head != b.edges[i].head) return false;
    return true;
  }
};

// A directed view of an edge: forward means tail->head.
struct DirectedEdgeRef {
  int edge_id = 0;
  bool forward = true;
};

}  // namespace flowround
