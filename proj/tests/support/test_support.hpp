#pragma once

#include <random>
#include <vector>

#include "bf/forest.hpp"
#include "bf/potential_graph.hpp"
#include "bf/vertex_set.hpp"

namespace bf::testsupport {

using Rng = std::mt19937_64;

// The worked 3-vertex instance used as a golden fixture throughout: loops
// 4, 1, 2 and saddles ab = 5, bc = 4, giving barriers 1, 4, 3, 2.
inline PotentialGraph three_basin() {
  PotentialGraph p(3, {4.0, 1.0, 2.0});
  p.set_edge(0, 1, 5.0);
  p.set_edge(1, 2, 4.0);
  return p;
}

inline PotentialGraph random_connected_potential(Rng& rng, int n,
                                                 double density = 0.5,
                                                 double lo = -10.0,
                                                 double hi = 10.0) {
  std::uniform_real_distribution<double> w(lo, hi);
  std::vector<double> loops(static_cast<std::size_t>(n));
  for (auto& x : loops) x = w(rng);
  PotentialGraph p(n, std::move(loops));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    p.set_edge(v, pick(rng), w(rng));
  }
  std::bernoulli_distribution extra(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!p.has_edge(i, j) && extra(rng)) p.set_edge(i, j, w(rng));
  return p;
}

// Possibly disconnected: no spanning-tree backbone, pure edge coin flips.
inline PotentialGraph random_potential(Rng& rng, int n, double density = 0.4,
                                       double lo = -10.0, double hi = 10.0) {
  std::uniform_real_distribution<double> w(lo, hi);
  std::vector<double> loops(static_cast<std::size_t>(n));
  for (auto& x : loops) x = w(rng);
  PotentialGraph p(n, std::move(loops));
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) p.set_edge(i, j, w(rng));
  return p;
}

// Uniform-ish random entering forest: a random vertex order, each vertex
// keeping no arc or an arc to some earlier vertex. Always acyclic.
inline EnteringForest random_entering_forest(Rng& rng, int n,
                                             double arc_prob = 0.7) {
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexId> parent(static_cast<std::size_t>(n), EnteringForest::kNoParent);
  std::bernoulli_distribution keep(arc_prob);
  for (int i = 1; i < n; ++i) {
    if (!keep(rng)) continue;
    std::uniform_int_distribution<int> pick(0, i - 1);
    parent[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
        order[static_cast<std::size_t>(pick(rng))];
  }
  return EnteringForest::from_parents(std::move(parent));
}

inline VertexSet random_subset(Rng& rng, int n, int size) {
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(size));
  return VertexSet(n, std::move(ids));
}

// Nonempty proper subset (requires n >= 2).
inline VertexSet random_proper_subset(Rng& rng, int n) {
  std::uniform_int_distribution<int> size(1, n - 1);
  return random_subset(rng, n, size(rng));
}

inline VertexSet random_nonempty_subset(Rng& rng, int n) {
  std::uniform_int_distribution<int> size(1, n);
  return random_subset(rng, n, size(rng));
}

}  // namespace bf::testsupport
