#include "bf/oracle.hpp"

#include <algorithm>

namespace bf::oracle {

namespace {

struct NodeCounter {
  std::uint64_t nodes = 0;
  std::uint64_t cap;
  explicit NodeCounter(const EnumerationBudget& b) : cap(b.max_nodes) {}
  void bump() {
    if (++nodes > cap) throw BudgetError("enumeration budget exceeded");
  }
};

void check_n(int n, const EnumerationBudget& b) {
  if (n > b.max_n) throw BudgetError("instance exceeds enumeration vertex cap");
}

// True if making `head` the parent of `tail` would close a contour under the
// current partial parent assignment (-1 entries are unassigned or roots).
bool closes_contour(const std::vector<VertexId>& parent, VertexId tail, VertexId head) {
  VertexId cur = head;
  while (cur != -1) {
    if (cur == tail) return true;
    cur = parent[static_cast<std::size_t>(cur)];
  }
  return false;
}

std::vector<std::vector<VertexId>> out_lists(const BarrierDigraph& v) {
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(v.size()));
  for (VertexId i = 0; i < v.size(); ++i)
    for (VertexId j = 0; j < v.size(); ++j)
      if (i != j && v.has_arc(i, j)) out[static_cast<std::size_t>(i)].push_back(j);
  return out;
}

// Walks every acyclic assignment of one outgoing arc (or none, when allowed)
// to each vertex in `order`, restricted to heads accepted by `allow_head`.
// Leaf callback sees the parent vector and the accumulated weight.
template <typename AllowHead, typename Leaf>
void walk_assignments(const BarrierDigraph& v, const std::vector<VertexId>& order,
                      bool allow_none, const std::vector<std::vector<VertexId>>& outs,
                      NodeCounter& counter, std::vector<VertexId>& parent,
                      AllowHead allow_head, Leaf leaf, std::size_t depth = 0,
                      Weight weight = 0.0) {
  counter.bump();
  if (depth == order.size()) {
    leaf(parent, weight);
    return;
  }
  VertexId tail = order[depth];
  if (allow_none)
    walk_assignments(v, order, allow_none, outs, counter, parent, allow_head, leaf,
                     depth + 1, weight);
  for (VertexId head : outs[static_cast<std::size_t>(tail)]) {
    if (!allow_head(tail, head)) continue;
    if (closes_contour(parent, tail, head)) continue;
    parent[static_cast<std::size_t>(tail)] = head;
    walk_assignments(v, order, allow_none, outs, counter, parent, allow_head, leaf,
                     depth + 1, weight + v.arc(tail, head));
    parent[static_cast<std::size_t>(tail)] = -1;
  }
}

std::vector<VertexId> all_vertices(VertexId n) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return order;
}

}  // namespace

void enumerate_entering_forests(const BarrierDigraph& v, int k,
                                const EnumerationBudget& budget,
                                const std::function<void(const EnteringForest&)>& fn) {
  check_n(v.size(), budget);
  NodeCounter counter(budget);
  auto outs = out_lists(v);
  std::vector<VertexId> parent(static_cast<std::size_t>(v.size()), -1);
  walk_assignments(
      v, all_vertices(v.size()), /*allow_none=*/true, outs, counter, parent,
      [](VertexId, VertexId) { return true; },
      [&](const std::vector<VertexId>& par, Weight) {
        int roots = static_cast<int>(std::count(par.begin(), par.end(), -1));
        if (roots == k) fn(EnteringForest::from_parents(par));
      });
}

std::vector<Weight> phi_all(const BarrierDigraph& v, const EnumerationBudget& budget) {
  check_n(v.size(), budget);
  NodeCounter counter(budget);
  auto outs = out_lists(v);
  std::vector<VertexId> parent(static_cast<std::size_t>(v.size()), -1);
  std::vector<Weight> best(static_cast<std::size_t>(v.size()) + 1, kInf);
  walk_assignments(
      v, all_vertices(v.size()), /*allow_none=*/true, outs, counter, parent,
      [](VertexId, VertexId) { return true; },
      [&](const std::vector<VertexId>& par, Weight w) {
        int roots = static_cast<int>(std::count(par.begin(), par.end(), -1));
        best[static_cast<std::size_t>(roots)] = std::min(best[static_cast<std::size_t>(roots)], w);
      });
  return best;
}

Weight phi(const BarrierDigraph& v, int k, const EnumerationBudget& budget) {
  if (k < 0 || k > v.size()) return kInf;
  return phi_all(v, budget)[static_cast<std::size_t>(k)];
}

namespace {

// Entering trees spanning s rooted at q: arcs stay inside s, every non-root
// vertex of s has exactly one.
template <typename Leaf>
void walk_trees_bullet_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                         const EnumerationBudget& budget, Leaf leaf) {
  if (!s.contains(q)) throw std::invalid_argument("root not in subset");
  check_n(s.size(), budget);
  NodeCounter counter(budget);
  auto outs = out_lists(v);
  std::vector<VertexId> order;
  for (VertexId t : s)
    if (t != q) order.push_back(t);
  std::vector<VertexId> parent(static_cast<std::size_t>(v.size()), -1);
  walk_assignments(
      v, order, /*allow_none=*/false, outs, counter, parent,
      [&](VertexId, VertexId head) { return s.contains(head); }, leaf);
}

}  // namespace

Weight lambda_bullet_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                       const EnumerationBudget& budget) {
  Weight best = kInf;
  walk_trees_bullet_q(v, s, q, budget,
                      [&](const std::vector<VertexId>&, Weight w) { best = std::min(best, w); });
  return best;
}

Weight lambda_bullet(const BarrierDigraph& v, const VertexSet& s,
                     const EnumerationBudget& budget) {
  Weight best = kInf;
  for (VertexId q : s) best = std::min(best, lambda_bullet_q(v, s, q, budget));
  return best;
}

void enumerate_min_trees_bullet_q(const BarrierDigraph& v, const VertexSet& s,
                                  VertexId q, const EnumerationBudget& budget,
                                  const std::function<void(const EnteringForest&)>& fn) {
  Weight best = lambda_bullet_q(v, s, q, budget);
  if (!is_present(best)) return;
  walk_trees_bullet_q(v, s, q, budget, [&](const std::vector<VertexId>& par, Weight w) {
    if (w == best) fn(EnteringForest::from_parents(par));
  });
}

namespace {

// Trees covering s plus one root r outside: every vertex of s gets a parent
// in s or r itself. cross_from < 0 admits any unique exit vertex; otherwise
// the single exit arc must leave cross_from.
Weight min_tree_with_exit(const BarrierDigraph& v, const VertexSet& s,
                          VertexId cross_from, const EnumerationBudget& budget) {
  check_n(s.size() + 1, budget);
  NodeCounter counter(budget);
  auto outs = out_lists(v);
  Weight best = kInf;
  std::vector<VertexId> order(s.ids());
  std::vector<VertexId> parent(static_cast<std::size_t>(v.size()), -1);
  for (VertexId r = 0; r < v.size(); ++r) {
    if (s.contains(r)) continue;
    walk_assignments(
        v, order, /*allow_none=*/false, outs, counter, parent,
        [&](VertexId, VertexId head) { return s.contains(head) || head == r; },
        [&](const std::vector<VertexId>& par, Weight w) {
          VertexId exit = -1;
          for (VertexId t : s) {
            if (par[static_cast<std::size_t>(t)] == r) {
              if (exit != -1) return;  // two arcs leave s: restriction not a tree
              exit = t;
            }
          }
          if (exit == -1) return;  // everything stayed inside: r unreached
          if (cross_from >= 0 && exit != cross_from) return;
          best = std::min(best, w);
        });
  }
  return best;
}

}  // namespace

Weight lambda_circ_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                     const EnumerationBudget& budget) {
  if (!s.contains(q)) throw std::invalid_argument("exit vertex not in subset");
  if (s.is_full()) throw std::invalid_argument("subset must be proper");
  return min_tree_with_exit(v, s, q, budget);
}

Weight lambda_circ(const BarrierDigraph& v, const VertexSet& s,
                   const EnumerationBudget& budget) {
  if (s.is_full()) throw std::invalid_argument("subset must be proper");
  return min_tree_with_exit(v, s, -1, budget);
}

namespace {

// Spanning-forest relaxations: arcs from s may exit anywhere; vertices
// outside s contribute nothing and stay rootless, which never hurts the
// minimum and keeps the graph a forest.
Weight min_forest_weight(const BarrierDigraph& v, const VertexSet& s,
                         VertexId exempt_root, const EnumerationBudget& budget) {
  check_n(s.size(), budget);
  NodeCounter counter(budget);
  auto outs = out_lists(v);
  std::vector<VertexId> order;
  for (VertexId t : s)
    if (t != exempt_root) order.push_back(t);
  std::vector<VertexId> parent(static_cast<std::size_t>(v.size()), -1);
  Weight best = kInf;
  walk_assignments(
      v, order, /*allow_none=*/false, outs, counter, parent,
      [](VertexId, VertexId) { return true; },
      [&](const std::vector<VertexId>&, Weight w) { best = std::min(best, w); });
  return best;
}

}  // namespace

Weight mu_bullet_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                   const EnumerationBudget& budget) {
  if (!s.contains(q)) throw std::invalid_argument("root not in subset");
  return min_forest_weight(v, s, q, budget);
}

Weight mu_bullet(const BarrierDigraph& v, const VertexSet& s,
                 const EnumerationBudget& budget) {
  Weight best = kInf;
  for (VertexId q : s) best = std::min(best, mu_bullet_q(v, s, q, budget));
  return best;
}

Weight mu_circ(const BarrierDigraph& v, const VertexSet& s,
               const EnumerationBudget& budget) {
  return min_forest_weight(v, s, -1, budget);
}

Weight nu(const PotentialGraph& p, const VertexSet& s, const EnumerationBudget& budget) {
  check_n(s.size(), budget);
  if (s.size() <= 1) return 0.0;
  struct Edge {
    VertexId a, b;
    Weight w;
  };
  std::vector<Edge> edges;
  const auto& ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (p.has_edge(ids[i], ids[j])) edges.push_back({ids[i], ids[j], p.edge(ids[i], ids[j])});
  const int need = s.size() - 1;
  NodeCounter counter(budget);
  Weight best = kInf;
  std::vector<int> pick;
  // Edge-subset enumeration: every (|s|-1)-subset, spanning checked by
  // counting successful unions.
  auto rec = [&](auto&& self, std::size_t next, int chosen, Weight w) -> void {
    counter.bump();
    if (chosen == need) {
      std::vector<VertexId> rep(static_cast<std::size_t>(p.size()), -1);
      for (VertexId t : ids) rep[static_cast<std::size_t>(t)] = t;
      auto find = [&](VertexId x) {
        while (rep[static_cast<std::size_t>(x)] != x) x = rep[static_cast<std::size_t>(x)];
        return x;
      };
      int joins = 0;
      for (int e : pick) {
        VertexId ra = find(edges[static_cast<std::size_t>(e)].a);
        VertexId rb = find(edges[static_cast<std::size_t>(e)].b);
        if (ra != rb) {
          rep[static_cast<std::size_t>(ra)] = rb;
          ++joins;
        }
      }
      if (joins == need) best = std::min(best, w);
      return;
    }
    if (next >= edges.size()) return;
    if (edges.size() - next < static_cast<std::size_t>(need - chosen)) return;
    pick.push_back(static_cast<int>(next));
    self(self, next + 1, chosen + 1, w + edges[next].w);
    pick.pop_back();
    self(self, next + 1, chosen, w);
  };
  rec(rec, 0, 0, 0.0);
  return best;
}

}  // namespace bf::oracle
