#include "flowround/linkcut.hpp"

#include <cassert>

#include "flowround/errors.hpp"

namespace flowround {

DynTree::DynTree(int node_count) : node_count_(node_count) {
  if (node_count < 0) fail(Errc::usage, "negative node count");
  nodes_.resize(node_count);
}

std::uint64_t DynTree::pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

void DynTree::check_node(int v) const {
  if (v < 0 || v >= node_count_) fail(Errc::usage, "node id out of range");
}

bool DynTree::is_splay_root(int x) const {
  int p = nodes_[x].parent;
  return p == -1 || (nodes_[p].child[0] != x && nodes_[p].child[1] != x);
}

void DynTree::apply_add(int x, const Rational& d) {
  Node& n = nodes_[x];
  if (n.is_edge) {
    n.avail_with -= d;
    n.avail_against += d;
  }
  if (n.agg_with.has) n.agg_with.min -= d;
  if (n.agg_against.has) n.agg_against.min += d;
  if (n.flip)
    n.pend -= d;
  else
    n.pend += d;
}

void DynTree::apply_flip(int x) {
  Node& n = nodes_[x];
  if (n.is_edge) {
    std::swap(n.avail_with, n.avail_against);
    n.cost_with = -n.cost_with;
    n.fwd = !n.fwd;
  }
  std::swap(n.agg_with, n.agg_against);
  std::swap(n.agg_with.first, n.agg_with.last);
  std::swap(n.agg_against.first, n.agg_against.last);
  n.cost_sum = -n.cost_sum;
  n.flip = !n.flip;
}

void DynTree::push_down(int x) {
  Node& n = nodes_[x];
  if (!n.pend.is_zero()) {
    for (int c : n.child)
      if (c != -1) apply_add(c, n.pend);
    n.pend = Rational(0);
  }
  if (n.flip) {
    std::swap(n.child[0], n.child[1]);
    for (int c : n.child)
      if (c != -1) apply_flip(c);
    n.flip = false;
  }
}

void DynTree::pull_up(int x) {
  Node& n = nodes_[x];
  assert(!n.flip && n.pend.is_zero());

  n.agg_with.has = n.agg_against.has = false;
  n.cost_sum = CostValue();

  auto fold_value = [](DirAgg& agg, const Rational& val, int node) {
    if (!agg.has || val < agg.min) {
      agg.has = true;
      agg.min = val;
      agg.first = agg.last = node;
    } else if (val == agg.min) {
      agg.last = node;
    }
  };
  auto fold_agg = [](DirAgg& agg, const DirAgg& sub) {
    if (!sub.has) return;
    if (!agg.has || sub.min < agg.min) {
      agg.has = true;
      agg.min = sub.min;
      agg.first = sub.first;
      agg.last = sub.last;
    } else if (sub.min == agg.min) {
      agg.last = sub.last;
    }
  };

  // In-order fold: left subtree, own edge payload, right subtree. Scanning
  // in order keeps `first` the leftmost minimum and `last` the rightmost,
  // which is what the tie-break needs on both path orientations.
  if (n.child[0] != -1) {
    const Node& l = nodes_[n.child[0]];
    fold_agg(n.agg_with, l.agg_with);
    fold_agg(n.agg_against, l.agg_against);
    n.cost_sum += l.cost_sum;
  }
  if (n.is_edge) {
    fold_value(n.agg_with, n.avail_with, x);
    fold_value(n.agg_against, n.avail_against, x);
    n.cost_sum += n.cost_with;
  }
  if (n.child[1] != -1) {
    const Node& r = nodes_[n.child[1]];
    fold_agg(n.agg_with, r.agg_with);
    fold_agg(n.agg_against, r.agg_against);
    n.cost_sum += r.cost_sum;
  }
}

void DynTree::rotate(int x) {
  ++rotations_;
  int y = nodes_[x].parent;
  int g = nodes_[y].parent;
  int k = nodes_[y].child[1] == x ? 1 : 0;

  if (!is_splay_root(y)) nodes_[g].child[nodes_[g].child[1] == y ? 1 : 0] = x;
  nodes_[x].parent = g;

  int b = nodes_[x].child[1 - k];
  nodes_[y].child[k] = b;
  if (b != -1) nodes_[b].parent = y;
  nodes_[x].child[1 - k] = y;
  nodes_[y].parent = x;

  pull_up(y);
  pull_up(x);
}

void DynTree::splay(int x) {
  static thread_local std::vector<int> stack;
  stack.clear();
  for (int q = x;; q = nodes_[q].parent) {
    stack.push_back(q);
    if (is_splay_root(q)) break;
  }
  for (size_t i = stack.size(); i-- > 0;) push_down(stack[i]);

  while (!is_splay_root(x)) {
    int y = nodes_[x].parent;
    if (!is_splay_root(y)) {
      int g = nodes_[y].parent;
      bool zigzig = (nodes_[g].child[1] == y) == (nodes_[y].child[1] == x);
      rotate(zigzig ? y : x);
    }
    rotate(x);
  }
}

void DynTree::access(int x) {
  splay(x);
  if (nodes_[x].child[1] != -1) {
    nodes_[x].child[1] = -1;  // old right keeps its parent pointer: now dashed
    pull_up(x);
  }
  while (nodes_[x].parent != -1) {
    int y = nodes_[x].parent;
    splay(y);
    nodes_[y].child[1] = x;
    pull_up(y);
    splay(x);
  }
}

void DynTree::evert(int v) {
  check_node(v);
  ++ops_;
  access(v);
  apply_flip(v);
}

int DynTree::find_root_internal(int v) {
  access(v);
  int c = v;
  push_down(c);
  while (nodes_[c].child[0] != -1) {
    c = nodes_[c].child[0];
    push_down(c);
  }
  splay(c);
  return c;
}

int DynTree::find_root(int v) {
  check_node(v);
  ++ops_;
  return find_root_internal(v);
}

bool DynTree::connected(int u, int v) {
  check_node(u);
  check_node(v);
  if (u == v) return true;
  return find_root(u) == find_root(v);
}

bool DynTree::has_edge(int u, int v) const {
  return edge_by_pair_.count(pair_key(u, v)) > 0;
}

int DynTree::alloc_edge_node() {
  if (!free_.empty()) {
    int id = free_.back();
    free_.pop_back();
    nodes_[id] = Node();
    return id;
  }
  nodes_.emplace_back();
  return static_cast<int>(nodes_.size()) - 1;
}

void DynTree::link(int u, int v, const EdgePayload& payload) {
  check_node(u);
  check_node(v);
  ++ops_;
  if (u == v) fail(Errc::same_tree, "link endpoints coincide");
  if (find_root_internal(u) == find_root_internal(v)) fail(Errc::same_tree, "link within one tree");
  if (payload.avail_uv.sign() < 0 || payload.avail_vu.sign() < 0)
    fail(Errc::negative_availability, "linking an edge with negative availability");

  int z = alloc_edge_node();
  Node& zn = nodes_[z];
  zn.is_edge = true;
  zn.edge_id = payload.edge_id;
  zn.link_u = u;
  zn.link_v = v;
  zn.fwd = true;
  zn.avail_with = payload.avail_uv;
  zn.avail_against = payload.avail_vu;
  zn.cost_with = payload.cost_uv;
  zn.agg_with = {true, payload.avail_uv, z, z};
  zn.agg_against = {true, payload.avail_vu, z, z};
  zn.cost_sum = payload.cost_uv;

  // v becomes the root of its tree, then hangs below the new edge node,
  // which hangs below u. Both attachments are dashed, so no splay surgery.
  access(v);
  apply_flip(v);  // evert v
  splay(v);
  nodes_[v].parent = z;
  zn.parent = u;

  edge_by_pair_.emplace(pair_key(u, v), z);
}

DynTree::EdgePayload DynTree::cut(int u, int v) {
  check_node(u);
  check_node(v);
  ++ops_;
  auto it = edge_by_pair_.find(pair_key(u, v));
  if (it == edge_by_pair_.end()) fail(Errc::no_such_edge, "cut on a missing edge");
  int z = it->second;

  access(u);
  apply_flip(u);  // evert u: in-order along the path now runs u -> v
  access(v);
  splay(z);

  Node& zn = nodes_[z];
  assert(zn.child[0] == u && nodes_[u].child[0] == -1 && nodes_[u].child[1] == -1);
  assert(zn.child[1] == v && nodes_[v].child[0] == -1 && nodes_[v].child[1] == -1);
  nodes_[u].parent = -1;
  nodes_[v].parent = -1;

  EdgePayload out;
  out.edge_id = zn.edge_id;
  out.avail_uv = zn.avail_with;  // "with" is the u->v direction here
  out.avail_vu = zn.avail_against;
  out.cost_uv = zn.cost_with;

  edge_by_pair_.erase(it);
  free_.push_back(z);
  return out;
}

int DynTree::expose_path(int u, int v) {
  access(u);
  apply_flip(u);  // evert
  int r = find_root_internal(v);
  if (r != u) return -1;
  return u;
}

void DynTree::path_add(int u, int v, const Rational& delta) {
  check_node(u);
  check_node(v);
  ++ops_;
  if (delta.sign() < 0) fail(Errc::usage, "path_add with negative delta; swap the endpoints");
  if (u == v) return;
  int h = expose_path(u, v);
  if (h == -1) fail(Errc::not_connected, "path_add endpoints in different trees");
  if (delta.is_zero()) return;
  const Node& hn = nodes_[h];
  assert(hn.agg_with.has);
  if (hn.agg_with.min < delta)
    fail(Errc::negative_availability, "path_add would drive an availability below zero");
  apply_add(h, delta);
}

DynTree::PathMinResult DynTree::path_min(int u, int v) {
  check_node(u);
  check_node(v);
  ++ops_;
  if (u == v) fail(Errc::same_node, "path_min needs two distinct nodes");
  int h = expose_path(u, v);
  if (h == -1) fail(Errc::not_connected, "path_min endpoints in different trees");
  assert(nodes_[h].agg_with.has);
  int z = nodes_[h].agg_with.first;
  Rational value = nodes_[h].agg_with.min;
  splay(z);  // pushes pending tags so the payload below is current
  const Node& zn = nodes_[z];
  assert(zn.avail_with == value);

  PathMinResult out;
  out.edge_id = zn.edge_id;
  out.value = value;
  out.traversed_forward = zn.fwd;
  out.near_node = zn.fwd ? zn.link_u : zn.link_v;
  out.far_node = zn.fwd ? zn.link_v : zn.link_u;
  return out;
}

CostValue DynTree::path_sum(int u, int v) {
  check_node(u);
  check_node(v);
  ++ops_;
  if (u == v) return CostValue();
  int h = expose_path(u, v);
  if (h == -1) fail(Errc::not_connected, "path_sum endpoints in different trees");
  return nodes_[h].cost_sum;
}

void DynTree::corrupt_aggregate_for_testing(int u, int v) {
  auto it = edge_by_pair_.find(pair_key(u, v));
  if (it == edge_by_pair_.end()) fail(Errc::no_such_edge, "no edge to corrupt");
  Node& zn = nodes_[it->second];
  zn.avail_with += Rational(1, 3);
}

}  // namespace flowround
