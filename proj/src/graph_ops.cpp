#include "bf/graph_ops.hpp"

#include <algorithm>

namespace bf {

bool PotentialGraph::connected() const { return component_count() <= 1; }

int PotentialGraph::component_count() const {
  if (n_ == 0) return 0;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<VertexId> stack;
  int comps = 0;
  for (VertexId s = 0; s < n_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w = 0; w < n_; ++w)
        if (!seen[static_cast<std::size_t>(w)] && has_edge(v, w)) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

Weight weight_on_set(const BarrierDigraph& host, const EnteringForest& f,
                     const VertexSet& s) {
  if (f.size() != host.size() || s.universe() != host.size())
    throw std::invalid_argument("size mismatch");
  Weight total = 0.0;
  for (VertexId v : s) {
    VertexId p = f.parent(v);
    if (p == EnteringForest::kNoParent) continue;
    Weight w = host.arc(v, p);
    if (!is_present(w)) throw StructureError("forest arc missing from host digraph");
    total += w;
  }
  return total;
}

Weight weight_total(const BarrierDigraph& host, const EnteringForest& f) {
  return weight_on_set(host, f, VertexSet::full(host.size()));
}

Weight weight_on_set(const BarrierDigraph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw std::invalid_argument("size mismatch");
  Weight total = 0.0;
  for (VertexId v : s)
    for (VertexId w = 0; w < g.size(); ++w)
      if (v != w && g.has_arc(v, w)) total += g.arc(v, w);
  return total;
}

Weight weight_undirected(const PotentialGraph& host, const UndirectedForest& f,
                         const VertexSet& s) {
  if (f.size() != host.size() || s.universe() != host.size())
    throw std::invalid_argument("size mismatch");
  Weight total = 0.0;
  for (auto [a, b] : f.edges()) {
    if (!(s.contains(a) && s.contains(b))) continue;
    Weight w = host.edge(a, b);
    if (!is_present(w)) throw StructureError("forest edge missing from host graph");
    total += w;
  }
  return total;
}

Weight weight_undirected(const PotentialGraph& host, const UndirectedForest& f) {
  return weight_undirected(host, f, VertexSet::full(host.size()));
}

Weight weight_undirected(const PotentialGraph& g, const VertexSet& s,
                         bool include_loops) {
  if (s.universe() != g.size()) throw std::invalid_argument("size mismatch");
  Weight total = 0.0;
  const auto& ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (include_loops) total += g.loop(ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.has_edge(ids[i], ids[j])) total += g.edge(ids[i], ids[j]);
  }
  return total;
}

BarrierDigraph induced_subgraph(const BarrierDigraph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw std::invalid_argument("size mismatch");
  const auto& ids = s.ids();
  BarrierDigraph out(static_cast<VertexId>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (i != j && g.has_arc(ids[i], ids[j]))
        out.set_arc(static_cast<VertexId>(i), static_cast<VertexId>(j),
                    g.arc(ids[i], ids[j]));
  return out;
}

PotentialGraph induced_subgraph(const PotentialGraph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw std::invalid_argument("size mismatch");
  const auto& ids = s.ids();
  std::vector<Weight> loops;
  loops.reserve(ids.size());
  for (VertexId v : ids) loops.push_back(g.loop(v));
  PotentialGraph out(static_cast<VertexId>(ids.size()), std::move(loops));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.has_edge(ids[i], ids[j]))
        out.set_edge(static_cast<VertexId>(i), static_cast<VertexId>(j),
                     g.edge(ids[i], ids[j]));
  return out;
}

EnteringForest induced_subgraph(const EnteringForest& f, const VertexSet& s) {
  if (s.universe() != f.size()) throw std::invalid_argument("size mismatch");
  const auto& ids = s.ids();
  std::vector<VertexId> dense(static_cast<std::size_t>(f.size()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i)
    dense[static_cast<std::size_t>(ids[i])] = static_cast<VertexId>(i);
  std::vector<VertexId> parent(ids.size(), EnteringForest::kNoParent);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    VertexId p = f.parent(ids[i]);
    if (p != EnteringForest::kNoParent && s.contains(p))
      parent[i] = dense[static_cast<std::size_t>(p)];
  }
  return EnteringForest::from_parents(std::move(parent));
}

namespace {

template <typename HasArc>
VertexSet neighborhood(VertexId n, const VertexSet& s, bool outgoing, HasArc has_arc) {
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (VertexId v : s)
    for (VertexId w = 0; w < n; ++w) {
      if (s.contains(w)) continue;
      bool arc = outgoing ? has_arc(v, w) : has_arc(w, v);
      if (arc) hit[static_cast<std::size_t>(w)] = 1;
    }
  std::vector<VertexId> ids;
  for (VertexId w = 0; w < n; ++w)
    if (hit[static_cast<std::size_t>(w)]) ids.push_back(w);
  return VertexSet(n, std::move(ids));
}

}  // namespace

VertexSet out_neighborhood(const BarrierDigraph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw std::invalid_argument("size mismatch");
  return neighborhood(g.size(), s, true,
                      [&](VertexId a, VertexId b) { return g.has_arc(a, b); });
}

VertexSet in_neighborhood(const BarrierDigraph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw std::invalid_argument("size mismatch");
  return neighborhood(g.size(), s, false,
                      [&](VertexId a, VertexId b) { return g.has_arc(a, b); });
}

VertexSet out_neighborhood(const EnteringForest& f, const VertexSet& s) {
  if (s.universe() != f.size()) throw std::invalid_argument("size mismatch");
  return neighborhood(f.size(), s, true,
                      [&](VertexId a, VertexId b) { return f.parent(a) == b; });
}

VertexSet in_neighborhood(const EnteringForest& f, const VertexSet& s) {
  if (s.universe() != f.size()) throw std::invalid_argument("size mismatch");
  return neighborhood(f.size(), s, false,
                      [&](VertexId a, VertexId b) { return f.parent(a) == b; });
}

std::vector<VertexId> replace_arcs(const EnteringForest& f, const EnteringForest& g,
                                   const VertexSet& d) {
  if (g.size() > f.size() || d.universe() != f.size())
    throw std::invalid_argument("vertex set mismatch");
  for (VertexId v : d)
    if (v >= g.size()) throw std::invalid_argument("replacement set exceeds donor forest");
  std::vector<VertexId> parent = f.parents();
  for (VertexId v : d) parent[static_cast<std::size_t>(v)] = g.parent(v);
  return parent;
}

namespace {

void orient_from(const UndirectedForest& f, VertexId root,
                 std::vector<VertexId>& parent, std::vector<char>& seen) {
  // adjacency of the forest, built lazily by the callers once
  // (small inputs; rebuilt here for simplicity).
  const VertexId n = f.size();
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : f.edges()) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<VertexId> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  parent[static_cast<std::size_t>(root)] = EnteringForest::kNoParent;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
}

}  // namespace

EnteringForest orient(const UndirectedForest& f, const std::vector<VertexId>& roots) {
  const VertexId n = f.size();
  auto rep = f.component_of();
  std::vector<char> root_seen(static_cast<std::size_t>(n), 0);
  for (VertexId r : roots) {
    if (r < 0 || r >= n) throw std::invalid_argument("root out of range");
    VertexId c = rep[static_cast<std::size_t>(r)];
    if (root_seen[static_cast<std::size_t>(c)])
      throw std::invalid_argument("two roots in one component");
    root_seen[static_cast<std::size_t>(c)] = 1;
  }
  for (VertexId v = 0; v < n; ++v)
    if (rep[static_cast<std::size_t>(v)] == v && !root_seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("component without a root");
  std::vector<VertexId> parent(static_cast<std::size_t>(n), EnteringForest::kNoParent);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (VertexId r : roots) orient_from(f, r, parent, seen);
  return EnteringForest::from_parents(std::move(parent));
}

EnteringForest orient_component(const UndirectedForest& f, VertexId root) {
  const VertexId n = f.size();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  std::vector<VertexId> parent(static_cast<std::size_t>(n), EnteringForest::kNoParent);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  orient_from(f, root, parent, seen);
  return EnteringForest::from_parents(std::move(parent));
}

UndirectedForest unorient(const EnteringForest& f) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < f.size(); ++v) {
    VertexId p = f.parent(v);
    if (p != EnteringForest::kNoParent) edges.emplace_back(v, p);
  }
  return UndirectedForest::from_edges(f.size(), std::move(edges));
}

UndirectedForest unorient(const EnteringForest& f, const PotentialGraph& p) {
  for (VertexId v = 0; v < f.size(); ++v) {
    VertexId w = f.parent(v);
    if (w != EnteringForest::kNoParent && !p.has_edge(v, w))
      throw StructureError("arc lacks a corresponding potential edge");
  }
  return unorient(f);
}

BarrierDigraph reverse_arcs(const BarrierDigraph& v) {
  BarrierDigraph out(v.size());
  for (auto [i, j, w] : v.arcs()) out.set_arc(j, i, w);
  return out;
}

}  // namespace bf
