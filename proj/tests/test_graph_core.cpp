#include <algorithm>

#include "bf/conversion.hpp"
#include "bf/graph_ops.hpp"
#include "doctest.h"
#include "support/test_support.hpp"

using namespace bf;
using testsupport::three_basin;

namespace {
const VertexId a = 0, b = 1, c = 2;
}

TEST_CASE("entering forest validation") {
  CHECK_THROWS_AS(EnteringForest::from_parents({1, 2, 0}), StructureError);  // 3-contour
  CHECK_THROWS_AS(EnteringForest::from_parents({1, 0}), StructureError);     // 2-contour
  CHECK_THROWS_AS(EnteringForest::from_parents({0}), StructureError);        // self arc
  CHECK_THROWS_AS(EnteringForest::from_parents({5, -1}), StructureError);    // bad id

  auto f = EnteringForest::from_parents({1, -1, 1, 2, -1});
  CHECK(f.roots() == std::vector<VertexId>{1, 4});
  CHECK(f.root_count() + f.arc_count() == 5);
  auto owner = f.tree_root_of();
  CHECK(owner == std::vector<VertexId>{1, 1, 1, 1, 4});
  CHECK(f.tree_vertices(1) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(f.tree_vertices(4) == std::vector<VertexId>{4});
  CHECK_THROWS_AS(f.tree_vertices(0), std::invalid_argument);
}

TEST_CASE("tree membership partitions the vertex set") {
  testsupport::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = testsupport::random_entering_forest(rng, 9);
    std::vector<int> hit(9, 0);
    for (VertexId r : f.roots())
      for (VertexId v : f.tree_vertices(r)) ++hit[static_cast<std::size_t>(v)];
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("directed weight on a subset counts tails only") {
  auto p = three_basin();
  auto v = potential_to_barrier(p);

  auto f = EnteringForest::from_parents({b, -1, -1});  // single arc (a,b)
  CHECK(weight_on_set(v, f, VertexSet(3, {a, b})) == 1.0);
  CHECK(weight_on_set(v, f, VertexSet(3, {b, c})) == 0.0);
  CHECK(weight_on_set(v, EnteringForest(3), VertexSet::full(3)) == 0.0);

  auto tree = EnteringForest::from_parents({b, -1, b});
  CHECK(weight_on_set(v, tree, VertexSet(3, {c})) == 2.0);  // v_cb = 4 - 2
  CHECK(weight_total(v, tree) == 3.0);
}

TEST_CASE("undirected weight needs both ends inside") {
  auto p = three_basin();
  auto fw = UndirectedForest::from_edges(3, {{b, c}});
  CHECK(weight_undirected(p, fw, VertexSet(3, {b, c})) == 4.0);
  CHECK(weight_undirected(p, fw, VertexSet(3, {c})) == 0.0);
  CHECK(weight_undirected(p, VertexSet(3, {a})) == 0.0);
  auto span = UndirectedForest::from_edges(3, {{a, b}, {b, c}});
  CHECK(weight_undirected(p, span, VertexSet::full(3)) == 9.0);
  CHECK(weight_undirected(p, VertexSet::full(3)) == 9.0);
  CHECK(weight_undirected(p, VertexSet::full(3), /*include_loops=*/true) == 16.0);
}

TEST_CASE("upsilon additivity over trees") {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = testsupport::random_connected_potential(rng, 7, /*density=*/1.0);
    auto v = potential_to_barrier(p);
    auto f = testsupport::random_entering_forest(rng, 7);
    Weight split = 0.0;
    for (VertexId r : f.roots())
      split += weight_on_set(v, f, VertexSet(7, f.tree_vertices(r)));
    CHECK(weight_total(v, f) == doctest::Approx(split).epsilon(1e-12));
  }
}

TEST_CASE("induced subgraphs keep only internal arcs") {
  auto p = three_basin();
  auto v = potential_to_barrier(p);

  auto vd = induced_subgraph(v, VertexSet::full(3));
  CHECK(vd == v);

  auto vac = induced_subgraph(v, VertexSet(3, {a, c}));
  CHECK(vac.arc_count() == 0);

  auto pbc = induced_subgraph(p, VertexSet(3, {b, c}));
  CHECK(pbc.size() == 2);
  CHECK(pbc.loop(0) == 1.0);
  CHECK(pbc.loop(1) == 2.0);
  CHECK(pbc.edge(0, 1) == 4.0);

  auto f = EnteringForest::from_parents({b, -1, b});
  auto fs = induced_subgraph(f, VertexSet(3, {a, b}));
  CHECK(fs.parents() == std::vector<VertexId>{1, -1});

  CHECK_THROWS_AS(VertexSet(3, {0, 3}), std::invalid_argument);
}

TEST_CASE("neighborhoods") {
  auto p = three_basin();
  auto v = potential_to_barrier(p);
  CHECK(out_neighborhood(v, VertexSet::full(3)).empty());
  CHECK(out_neighborhood(v, VertexSet(3, {a})) == VertexSet(3, {b}));
  CHECK(in_neighborhood(v, VertexSet(3, {b})) == VertexSet(3, {a, c}));
  auto f = EnteringForest::from_parents({b, -1, b});
  CHECK(out_neighborhood(f, VertexSet(3, {a, c})) == VertexSet(3, {b}));
  CHECK(in_neighborhood(f, VertexSet(3, {b})) == VertexSet(3, {a, c}));
}

TEST_CASE("replace_arcs substitutes outgoing arcs on the chosen set") {
  auto f = EnteringForest::from_parents({b, -1, -1});
  auto g = EnteringForest::from_parents({2, -1, -1});

  CHECK(replace_arcs(f, g, VertexSet::none(3)) == f.parents());
  auto swapped = replace_arcs(f, g, VertexSet(3, {a}));
  CHECK(swapped == std::vector<VertexId>{2, -1, -1});
}

TEST_CASE("arc replacement on sets without incoming donor arcs yields forests") {
  // Random forest pairs; every subset of vertices that receives no arc in the
  // acceptor is a valid replacement set.
  testsupport::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6;
    auto f = testsupport::random_entering_forest(rng, n);
    auto g = testsupport::random_entering_forest(rng, n);
    std::vector<char> receives(n, 0);
    for (VertexId v = 0; v < n; ++v)
      if (f.parent(v) != EnteringForest::kNoParent)
        receives[static_cast<std::size_t>(f.parent(v))] = 1;
    std::vector<VertexId> eligible;
    for (VertexId v = 0; v < n; ++v)
      if (!receives[static_cast<std::size_t>(v)]) eligible.push_back(v);
    // all subsets of the eligible vertices
    for (std::uint32_t mask = 0; mask < (1u << eligible.size()); ++mask) {
      std::vector<VertexId> d;
      for (std::size_t i = 0; i < eligible.size(); ++i)
        if (mask & (1u << i)) d.push_back(eligible[i]);
      auto parents = replace_arcs(f, g, VertexSet(n, d));
      CHECK_NOTHROW(EnteringForest::from_parents(parents));
    }
  }
}

TEST_CASE("arc replacement under the two-tree preconditions works both ways") {
  testsupport::Rng rng(29);
  int found = 0;
  for (int trial = 0; trial < 4000 && found < 60; ++trial) {
    const int n = 6;
    auto f = testsupport::random_entering_forest(rng, n);
    auto g = testsupport::random_entering_forest(rng, n);
    auto fo = f.tree_root_of();
    auto go = g.tree_root_of();
    for (VertexId rf : f.roots()) {
      for (VertexId rg : g.roots()) {
        std::vector<VertexId> common;
        for (VertexId v = 0; v < n; ++v)
          if (fo[static_cast<std::size_t>(v)] == rf && go[static_cast<std::size_t>(v)] == rg)
            common.push_back(v);
        if (common.empty()) continue;
        for (std::uint32_t mask = 1; mask < (1u << common.size()); ++mask) {
          std::vector<VertexId> ids;
          for (std::size_t i = 0; i < common.size(); ++i)
            if (mask & (1u << i)) ids.push_back(common[i]);
          VertexSet d(n, ids);
          if (!in_neighborhood(g, d).empty()) continue;
          bool heads_ok = true;
          for (VertexId v : d) {
            VertexId h = g.parent(v);
            if (h == EnteringForest::kNoParent || d.contains(h)) continue;
            if (go[static_cast<std::size_t>(h)] != rg ||
                fo[static_cast<std::size_t>(h)] == rf) {
              heads_ok = false;
              break;
            }
          }
          if (!heads_ok) continue;
          ++found;
          CHECK_NOTHROW(EnteringForest::from_parents(replace_arcs(f, g, d)));
          CHECK_NOTHROW(EnteringForest::from_parents(replace_arcs(g, f, d)));
        }
      }
    }
  }
  CHECK(found >= 60);
}

TEST_CASE("orientation golden cases") {
  auto p = three_basin();
  auto v = potential_to_barrier(p);
  auto tree = UndirectedForest::from_edges(3, {{a, b}, {b, c}});

  auto tb = orient_component(tree, b);
  CHECK(tb.parents() == std::vector<VertexId>{b, -1, b});
  CHECK(weight_total(v, tb) == 3.0);

  auto tc = orient_component(tree, c);
  CHECK(tc.parents() == std::vector<VertexId>{b, c, -1});
  CHECK(weight_total(v, tc) == 4.0);

  auto single = orient_component(UndirectedForest(3), a);
  CHECK(single.arc_count() == 0);
  CHECK(weight_total(v, single) == 0.0);
}

TEST_CASE("orient and unorient are mutually inverse") {
  testsupport::Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto f = testsupport::random_entering_forest(rng, 8);
    auto u = unorient(f);
    CHECK(orient(u, f.roots()) == f);
  }
  // per-component, per-root round trip
  auto tree = UndirectedForest::from_edges(3, {{a, b}, {b, c}});
  for (VertexId q : {a, b, c}) {
    auto t = orient_component(tree, q);
    CHECK(unorient(t) == tree);
    CHECK(orient_component(unorient(t), q) == t);
  }
  CHECK_THROWS_AS(orient(tree, {a, b}), std::invalid_argument);
  CHECK_THROWS_AS(orient(UndirectedForest(2), {0}), std::invalid_argument);
}

TEST_CASE("unorient checks edges against the potential graph") {
  auto p = three_basin();
  auto ok = EnteringForest::from_parents({b, -1, b});
  CHECK_NOTHROW(unorient(ok, p));
  auto bad = EnteringForest::from_parents({c, -1, -1});  // arc (a,c) has no edge
  CHECK_THROWS_AS(unorient(bad, p), StructureError);
}

TEST_CASE("reverse_arcs transposes and is an involution") {
  auto p = three_basin();
  auto v = potential_to_barrier(p);
  auto r = reverse_arcs(v);
  CHECK(r.arc(b, a) == v.arc(a, b));
  CHECK(r.arc(a, b) == v.arc(b, a));
  CHECK(reverse_arcs(r) == v);
  CHECK(reverse_arcs(BarrierDigraph(4)) == BarrierDigraph(4));
}

TEST_CASE("barrier digraph pairing flag") {
  BarrierDigraph v(3);
  v.set_arc(0, 1, 1.0);
  CHECK_FALSE(v.has_paired_arcs());
  v.set_arc(1, 0, 2.0);
  CHECK(v.has_paired_arcs());
  CHECK_THROWS_AS(v.set_arc(0, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(v.set_arc(0, 1, kInf), std::invalid_argument);
}
