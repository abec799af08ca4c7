#include "bf/forest.hpp"

#include <algorithm>
#include <numeric>

namespace bf {

EnteringForest EnteringForest::from_parents(std::vector<VertexId> parent) {
  const VertexId n = static_cast<VertexId>(parent.size());
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = parent[static_cast<std::size_t>(v)];
    if (p == v || p < kNoParent || p >= n)
      throw StructureError("invalid parent entry");
  }
  // Parent-following from every vertex must reach a root within n steps.
  // state: 0 unseen, 1 on current path, 2 settled.
  std::vector<char> state(static_cast<std::size_t>(n), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (state[static_cast<std::size_t>(v)]) continue;
    VertexId w = v;
    while (w != kNoParent && state[static_cast<std::size_t>(w)] == 0) {
      state[static_cast<std::size_t>(w)] = 1;
      w = parent[static_cast<std::size_t>(w)];
    }
    if (w != kNoParent && state[static_cast<std::size_t>(w)] == 1)
      throw StructureError("entering forest has a contour");
    w = v;
    while (w != kNoParent && state[static_cast<std::size_t>(w)] == 1) {
      state[static_cast<std::size_t>(w)] = 2;
      w = parent[static_cast<std::size_t>(w)];
    }
  }
  EnteringForest f;
  f.parent_ = std::move(parent);
  return f;
}

std::vector<VertexId> EnteringForest::tree_root_of() const {
  const VertexId n = size();
  std::vector<VertexId> root(static_cast<std::size_t>(n), kNoParent);
  std::vector<VertexId> path;
  for (VertexId v = 0; v < n; ++v) {
    if (root[static_cast<std::size_t>(v)] != kNoParent) continue;
    path.clear();
    VertexId w = v;
    while (w != kNoParent && root[static_cast<std::size_t>(w)] == kNoParent) {
      path.push_back(w);
      w = parent_[static_cast<std::size_t>(w)];
    }
    VertexId r = (w == kNoParent) ? path.back() : root[static_cast<std::size_t>(w)];
    for (VertexId u : path) root[static_cast<std::size_t>(u)] = r;
  }
  return root;
}

std::vector<VertexId> EnteringForest::tree_vertices(VertexId root) const {
  check(root);
  if (!is_root(root)) throw std::invalid_argument("vertex is not a root");
  std::vector<VertexId> out;
  auto owner = tree_root_of();
  for (VertexId v = 0; v < size(); ++v)
    if (owner[static_cast<std::size_t>(v)] == root) out.push_back(v);
  return out;
}

namespace {

// Minimal union-find; components later normalized to their smallest member.
struct Uf {
  explicit Uf(VertexId n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  VertexId find(VertexId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // false if already joined
  bool join(VertexId a, VertexId b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
    return true;
  }
  std::vector<VertexId> parent;
};

}  // namespace

UndirectedForest UndirectedForest::from_edges(
    VertexId n, std::vector<std::pair<VertexId, VertexId>> edges) {
  Uf uf(n);
  for (auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw StructureError("edge endpoint out of range");
    if (a == b) throw StructureError("forest edge cannot be a loop");
    if (a > b) std::swap(a, b);
    if (!uf.join(a, b)) throw StructureError("undirected forest has a cycle");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw StructureError("duplicate edge");
  UndirectedForest f(n);
  f.edges_ = std::move(edges);
  return f;
}

bool UndirectedForest::has_edge(VertexId i, VertexId j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

std::vector<VertexId> UndirectedForest::component_of() const {
  Uf uf(n_);
  for (auto [a, b] : edges_) uf.join(a, b);
  std::vector<VertexId> rep(static_cast<std::size_t>(n_));
  std::vector<VertexId> smallest(static_cast<std::size_t>(n_), -1);
  for (VertexId v = 0; v < n_; ++v) {
    VertexId r = uf.find(v);
    if (smallest[static_cast<std::size_t>(r)] == -1)
      smallest[static_cast<std::size_t>(r)] = v;  // first visit is the min id
  }
  for (VertexId v = 0; v < n_; ++v)
    rep[static_cast<std::size_t>(v)] = smallest[static_cast<std::size_t>(uf.find(v))];
  return rep;
}

std::vector<VertexId> UndirectedForest::component_vertices(VertexId member) const {
  if (member < 0 || member >= n_) throw std::invalid_argument("vertex id out of range");
  auto rep = component_of();
  VertexId r = rep[static_cast<std::size_t>(member)];
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v)
    if (rep[static_cast<std::size_t>(v)] == r) out.push_back(v);
  return out;
}

}  // namespace bf
