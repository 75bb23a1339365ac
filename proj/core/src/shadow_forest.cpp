#include "flowround/shadow_forest.hpp"

#include <algorithm>

#include "flowround/errors.hpp"

namespace flowround {

namespace {
std::pair<int, int> norm(int u, int v) { return {std::min(u, v), std::max(u, v)}; }
}  // namespace

ShadowForest::ShadowForest(int node_count)
    : node_count_(node_count), parent_(node_count, -1) {}

int ShadowForest::find_root(int v) const {
  while (parent_[v] != -1) v = parent_[v];
  return v;
}

bool ShadowForest::connected(int u, int v) const { return find_root(u) == find_root(v); }

void ShadowForest::reroot(int v) {
  int prev = -1;
  int cur = v;
  while (cur != -1) {
    int next = parent_[cur];
    parent_[cur] = prev;
    prev = cur;
    cur = next;
  }
}

void ShadowForest::link(int u, int v, const DynTree::EdgePayload& payload) {
  if (u == v || connected(u, v)) fail(Errc::same_tree, "link within one tree");
  reroot(v);
  parent_[v] = u;
  edges_[norm(u, v)] = Edge{payload.edge_id, u, v, payload.avail_uv, payload.avail_vu, payload.cost_uv};
  edge_list_.push_back(norm(u, v));
}

DynTree::EdgePayload ShadowForest::cut(int u, int v) {
  auto it = edges_.find(norm(u, v));
  if (it == edges_.end()) fail(Errc::no_such_edge, "cut on a missing edge");
  reroot(u);
  parent_[v] = -1;

  const Edge& e = it->second;
  DynTree::EdgePayload out;
  out.edge_id = e.edge_id;
  bool call_matches_store = (e.u == u);
  out.avail_uv = call_matches_store ? e.avail_uv : e.avail_vu;
  out.avail_vu = call_matches_store ? e.avail_vu : e.avail_uv;
  out.cost_uv = call_matches_store ? e.cost_uv : -e.cost_uv;

  edge_list_.erase(std::find(edge_list_.begin(), edge_list_.end(), norm(u, v)));
  edges_.erase(it);
  return out;
}

std::vector<ShadowForest::Step> ShadowForest::walk(int u, int v) {
  reroot(u);
  std::vector<Step> rev;
  int cur = v;
  while (cur != u) {
    int p = parent_[cur];
    rev.push_back({p, cur, edges_.find(norm(p, cur))});
    cur = p;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

void ShadowForest::path_add(int u, int v, const Rational& delta) {
  if (delta.sign() < 0) fail(Errc::usage, "path_add with negative delta; swap the endpoints");
  if (u == v) return;
  if (!connected(u, v)) fail(Errc::not_connected, "path_add endpoints in different trees");
  auto steps = walk(u, v);
  if (delta.is_zero()) return;
  for (const auto& s : steps) {
    Edge& e = s.edge->second;
    const Rational& along = (e.u == s.from) ? e.avail_uv : e.avail_vu;
    if (along < delta) fail(Errc::negative_availability, "path_add would drive an availability below zero");
  }
  for (const auto& s : steps) {
    Edge& e = s.edge->second;
    if (e.u == s.from) {
      e.avail_uv -= delta;
      e.avail_vu += delta;
    } else {
      e.avail_vu -= delta;
      e.avail_uv += delta;
    }
  }
}

DynTree::PathMinResult ShadowForest::path_min(int u, int v) {
  if (u == v) fail(Errc::same_node, "path_min needs two distinct nodes");
  if (!connected(u, v)) fail(Errc::not_connected, "path_min endpoints in different trees");
  auto steps = walk(u, v);
  DynTree::PathMinResult out;
  bool have = false;
  Rational best;
  for (const auto& s : steps) {
    const Edge& e = s.edge->second;
    bool fwd = (e.u == s.from);
    const Rational& along = fwd ? e.avail_uv : e.avail_vu;
    if (!have || along < best) {
      have = true;
      best = along;
      out.edge_id = e.edge_id;
      out.value = along;
      out.traversed_forward = fwd;
      out.near_node = s.from;
      out.far_node = s.to;
    }
  }
  return out;
}

CostValue ShadowForest::path_sum(int u, int v) {
  if (u == v) return CostValue();
  if (!connected(u, v)) fail(Errc::not_connected, "path_sum endpoints in different trees");
  CostValue total;
  for (const auto& s : walk(u, v)) {
    const Edge& e = s.edge->second;
    total += (e.u == s.from) ? e.cost_uv : -e.cost_uv;
  }
  return total;
}

}  // namespace flowround
