#include "bf/minima.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <tuple>

#include "bf/graph_ops.hpp"

namespace bf {

namespace {

std::atomic<std::uint64_t> g_mst_runs{0};

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
  bool join(VertexId a, VertexId b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
    return true;
  }
  std::vector<VertexId> parent;
};

struct SortedEdge {
  Weight w;
  VertexId a, b;  // a < b
  bool operator<(const SortedEdge& o) const {
    return std::tie(w, a, b) < std::tie(o.w, o.a, o.b);
  }
};

std::vector<SortedEdge> sorted_edges_within(const PotentialGraph& p, const VertexSet& s) {
  std::vector<SortedEdge> edges;
  const auto& ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (p.has_edge(ids[i], ids[j]))
        edges.push_back({p.edge(ids[i], ids[j]), ids[i], ids[j]});
  std::sort(edges.begin(), edges.end());
  return edges;
}

Weight loop_sum(const PotentialGraph& p, const VertexSet& s) {
  Weight total = 0.0;
  for (VertexId v : s) total += p.loop(v);
  return total;
}

// Minimal boundary potential leaving s; lexicographic (from, to) on ties.
LambdaCirc min_boundary(const PotentialGraph& p, const VertexSet& s) {
  LambdaCirc best;
  best.value = kInf;
  for (VertexId q : s)
    for (VertexId r = 0; r < p.size(); ++r) {
      if (s.contains(r) || !p.has_edge(q, r)) continue;
      Weight w = p.edge(q, r);
      if (w < best.value ||
          (w == best.value && std::make_pair(q, r) < std::make_pair(best.from, best.to))) {
        best = {w, q, r};
      }
    }
  return best;
}

}  // namespace

std::uint64_t mst_run_count() { return g_mst_runs.load(); }
void reset_mst_run_count() { g_mst_runs.store(0); }

NuResult nu(const PotentialGraph& p, const VertexSet& s) {
  if (s.universe() != p.size()) throw std::invalid_argument("size mismatch");
  g_mst_runs.fetch_add(1, std::memory_order_relaxed);
  NuResult out;
  out.tree = UndirectedForest(p.size());
  if (s.empty()) {
    out.weight = 0.0;
    return out;
  }
  Uf uf(p.size());
  std::vector<std::pair<VertexId, VertexId>> picked;
  Weight total = 0.0;
  for (const auto& e : sorted_edges_within(p, s)) {
    if (uf.join(e.a, e.b)) {
      picked.emplace_back(e.a, e.b);
      total += e.w;
      if (static_cast<int>(picked.size()) == s.size() - 1) break;
    }
  }
  if (static_cast<int>(picked.size()) != s.size() - 1) return out;  // disconnected
  out.weight = total;
  out.tree = UndirectedForest::from_edges(p.size(), std::move(picked));
  return out;
}

Weight lambda_bullet(const PotentialGraph& p, const VertexSet& s, VertexId q) {
  if (!s.contains(q)) throw std::invalid_argument("root not in subset");
  NuResult base = nu(p, s);
  if (!is_present(base.weight)) return kInf;
  return base.weight - loop_sum(p, s) + p.loop(q);
}

LambdaBullet lambda_bullet_min(const PotentialGraph& p, const VertexSet& s) {
  LambdaBullet out;
  if (s.empty()) return out;
  out.root = s.ids().front();
  for (VertexId v : s)
    if (p.loop(v) < p.loop(out.root)) out.root = v;
  NuResult base = nu(p, s);
  if (is_present(base.weight))
    out.value = base.weight - loop_sum(p, s) + p.loop(out.root);
  return out;
}

LambdaCirc lambda_circ(const PotentialGraph& p, const VertexSet& s) {
  if (s.universe() != p.size()) throw std::invalid_argument("size mismatch");
  if (s.is_full()) throw std::invalid_argument("subset must be proper");
  LambdaCirc boundary = min_boundary(p, s);
  if (!is_present(boundary.value)) return boundary;  // no exit: +inf, no witness
  NuResult base = nu(p, s);
  if (!is_present(base.weight)) return LambdaCirc{};  // no tree on s
  boundary.value = base.weight - loop_sum(p, s) + boundary.value;
  return boundary;
}

Weight lambda_circ_q(const PotentialGraph& p, const BarrierDigraph& v,
                     const VertexSet& s, VertexId q) {
  if (!s.contains(q)) throw std::invalid_argument("exit vertex not in subset");
  if (s.is_full()) throw std::invalid_argument("subset must be proper");
  Weight exit = kInf;
  for (VertexId r = 0; r < v.size(); ++r)
    if (!s.contains(r) && v.has_arc(q, r)) exit = std::min(exit, v.arc(q, r));
  if (!is_present(exit)) return kInf;
  Weight rooted = lambda_bullet(p, s, q);
  if (!is_present(rooted)) return kInf;
  return rooted + exit;
}

SubsetMinima subset_minima(const PotentialGraph& p, const BarrierDigraph& v,
                           const VertexSet& s) {
  SubsetMinima out;
  out.s = s;
  NuResult base = nu(p, s);
  out.nu = base.weight;
  const Weight loops = loop_sum(p, s);
  out.lambda_bullet_q.assign(s.ids().size(), kInf);
  out.lambda_circ_q.assign(s.ids().size(), kInf);
  if (!s.empty()) {
    out.argmin_root = s.ids().front();
    for (VertexId t : s)
      if (p.loop(t) < p.loop(out.argmin_root)) out.argmin_root = t;
  }
  if (is_present(out.nu)) {
    for (std::size_t i = 0; i < s.ids().size(); ++i)
      out.lambda_bullet_q[i] = out.nu - loops + p.loop(s.ids()[i]);
    out.lambda_bullet = out.nu - loops + p.loop(out.argmin_root);
  }
  if (!s.is_full()) {
    LambdaCirc boundary = min_boundary(p, s);
    out.boundary_from = boundary.from;
    out.boundary_to = boundary.to;
    if (is_present(boundary.value) && is_present(out.nu))
      out.lambda_circ = out.nu - loops + boundary.value;
    if (is_present(out.nu)) {
      for (std::size_t i = 0; i < s.ids().size(); ++i) {
        VertexId q = s.ids()[i];
        Weight exit = kInf;
        for (VertexId r = 0; r < p.size(); ++r)
          if (!s.contains(r) && v.has_arc(q, r)) exit = std::min(exit, v.arc(q, r));
        if (is_present(exit))
          out.lambda_circ_q[i] = out.lambda_bullet_q[i] + exit;
      }
    }
  }
  return out;
}

DescentStep descent_increment(const PotentialGraph& p, const EnteringForest& f) {
  if (f.size() != p.size()) throw std::invalid_argument("size mismatch");
  auto roots = f.roots();
  if (roots.size() <= 1)
    throw std::invalid_argument("descent needs at least two trees");
  auto owner = f.tree_root_of();
  // Minimal boundary potential per tree, one pass over all edges.
  std::vector<Weight> exit(roots.size(), kInf);
  std::vector<std::size_t> slot(static_cast<std::size_t>(p.size()));
  for (std::size_t i = 0; i < roots.size(); ++i)
    slot[static_cast<std::size_t>(roots[i])] = i;
  for (VertexId q = 0; q < p.size(); ++q) {
    std::size_t sq = slot[static_cast<std::size_t>(owner[static_cast<std::size_t>(q)])];
    for (VertexId r = 0; r < p.size(); ++r) {
      if (q == r || !p.has_edge(q, r)) continue;
      if (owner[static_cast<std::size_t>(r)] == owner[static_cast<std::size_t>(q)]) continue;
      exit[sq] = std::min(exit[sq], p.edge(q, r));
    }
  }
  DescentStep best;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Weight inc = is_present(exit[i]) ? exit[i] - p.loop(roots[i]) : kInf;
    if (inc < best.increment) best = {roots[i], inc};
  }
  if (best.root == -1) best.root = roots.front();  // all-infinite: no descendant
  return best;
}

bool check_descent(const PotentialGraph& p, const EnteringForest& f,
                   const EnteringForest& g) {
  if (f.size() != p.size() || g.size() != p.size())
    throw std::invalid_argument("size mismatch");
  auto kf = f.roots();
  auto kg = g.roots();
  if (kg.size() + 1 != kf.size())
    throw std::invalid_argument("not descendant-shaped: root counts");
  std::vector<VertexId> dropped;
  std::set_difference(kf.begin(), kf.end(), kg.begin(), kg.end(),
                      std::back_inserter(dropped));
  if (dropped.size() != 1 ||
      !std::includes(kf.begin(), kf.end(), kg.begin(), kg.end()))
    throw std::invalid_argument("not descendant-shaped: roots not nested");
  const VertexId y = dropped.front();
  auto owner = f.tree_root_of();
  std::vector<VertexId> tree_y;
  for (VertexId v = 0; v < f.size(); ++v) {
    if (owner[static_cast<std::size_t>(v)] == y) {
      tree_y.push_back(v);
    } else if (g.parent(v) != f.parent(v)) {
      throw std::invalid_argument("not descendant-shaped: arcs changed outside absorbed tree");
    }
  }
  VertexSet sy(p.size(), tree_y);
  // Restriction to the absorbed set must be a tree: exactly one arc leaves.
  int leaving = 0;
  for (VertexId v : sy) {
    VertexId w = g.parent(v);
    if (w == EnteringForest::kNoParent)
      throw std::invalid_argument("not descendant-shaped: absorbed vertex kept rootless");
    if (!sy.contains(w)) ++leaving;
  }
  if (leaving != 1)
    throw std::invalid_argument("not descendant-shaped: absorbed set is not one tree");

  // Weight of g's arcs out of the absorbed set, in barrier weights.
  Weight upsilon = 0.0;
  for (VertexId v : sy) {
    VertexId w = g.parent(v);
    if (!p.has_edge(v, w)) throw StructureError("arc lacks a corresponding potential edge");
    upsilon += p.edge(v, w) - p.loop(v);
  }
  LambdaCirc circ = lambda_circ(p, sy);
  if (upsilon != circ.value) return false;

  // y must attain the minimal gap between exit and rooted minima over trees.
  Weight best_gap = kInf, gap_y = kInf;
  for (VertexId l : kf) {
    VertexSet sl(p.size(), f.tree_vertices(l));
    Weight b = min_boundary(p, sl).value;
    Weight min_loop = kInf;
    for (VertexId t : sl) min_loop = std::min(min_loop, p.loop(t));
    Weight gap = is_present(b) ? b - min_loop : kInf;
    best_gap = std::min(best_gap, gap);
    if (l == y) gap_y = gap;
  }
  return gap_y == best_gap;
}

Weight merged_lambda(Weight lambda_x, Weight lambda_circ_y) {
  return lambda_x + lambda_circ_y;
}

MstAllRoots mst_all_roots(const PotentialGraph& p) {
  MstAllRoots out;
  out.tree = UndirectedForest(p.size());
  out.lambda_by_root.assign(static_cast<std::size_t>(p.size()), kInf);
  if (p.size() == 0) return out;
  const VertexSet all = VertexSet::full(p.size());
  out.auto_root = 0;
  for (VertexId v = 0; v < p.size(); ++v)
    if (p.loop(v) < p.loop(out.auto_root)) out.auto_root = v;
  NuResult base = nu(p, all);
  out.nu = base.weight;
  if (!is_present(base.weight)) return out;
  out.tree = std::move(base.tree);
  Weight loops = loop_sum(p, all);
  for (VertexId q = 0; q < p.size(); ++q)
    out.lambda_by_root[static_cast<std::size_t>(q)] = out.nu - loops + p.loop(q);
  return out;
}

UndirectedForestResult min_undirected_forest(const PotentialGraph& p, int k) {
  if (k < 1 || k > p.size()) throw std::invalid_argument("component count out of range");
  UndirectedForestResult out;
  out.forest = UndirectedForest(p.size());
  Uf uf(p.size());
  std::vector<std::pair<VertexId, VertexId>> picked;
  Weight total = 0.0;
  const int want = static_cast<int>(p.size()) - k;
  for (const auto& e : sorted_edges_within(p, VertexSet::full(p.size()))) {
    if (static_cast<int>(picked.size()) == want) break;
    if (uf.join(e.a, e.b)) {
      picked.emplace_back(e.a, e.b);
      total += e.w;
    }
  }
  if (static_cast<int>(picked.size()) != want) return out;  // too many components
  out.weight = total;
  out.forest = UndirectedForest::from_edges(p.size(), std::move(picked));
  return out;
}

}  // namespace bf
