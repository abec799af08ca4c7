#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bf/barrier_digraph.hpp"
#include "bf/forest.hpp"
#include "bf/potential_graph.hpp"
#include "bf/vertex_set.hpp"

namespace bf::oracle {

// Exhaustive enumeration certifies the fast paths on small instances. Every
// oracle walks per-vertex outgoing-arc choices with early contour pruning and
// aborts with BudgetError instead of running unbounded.
struct EnumerationBudget {
  int max_n = 8;
  std::uint64_t max_nodes = 400'000'000;  // search-tree node cap
};

// Every spanning entering forest of v with exactly k trees, each once.
void enumerate_entering_forests(const BarrierDigraph& v, int k,
                                const EnumerationBudget& budget,
                                const std::function<void(const EnteringForest&)>& fn);

// Minimum k-forest weights for all k in one sweep; index k in [0, n].
// phi[n] == 0, phi[0] == kInf, absent classes read kInf.
std::vector<Weight> phi_all(const BarrierDigraph& v, const EnumerationBudget& budget);
Weight phi(const BarrierDigraph& v, int k, const EnumerationBudget& budget);

// Entering trees spanning s. Root fixed (bullet_q), free (bullet), or the
// tree extended by exactly one outgoing boundary arc (circ variants).
Weight lambda_bullet_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                       const EnumerationBudget& budget);
Weight lambda_bullet(const BarrierDigraph& v, const VertexSet& s,
                     const EnumerationBudget& budget);
Weight lambda_circ_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                     const EnumerationBudget& budget);
Weight lambda_circ(const BarrierDigraph& v, const VertexSet& s,
                   const EnumerationBudget& budget);

// Every minimum entering tree spanning s with root q (callback receives each
// argmin). Used to cross-check orientation transfer against every witness.
void enumerate_min_trees_bullet_q(const BarrierDigraph& v, const VertexSet& s,
                                  VertexId q, const EnumerationBudget& budget,
                                  const std::function<void(const EnteringForest&)>& fn);

// Forest-relaxed minima over spanning forests of v: weight of arcs leaving s
// only. bullet_q: s contains exactly one forest root, q. circ: arcs leave
// every vertex of s.
Weight mu_bullet_q(const BarrierDigraph& v, const VertexSet& s, VertexId q,
                   const EnumerationBudget& budget);
Weight mu_bullet(const BarrierDigraph& v, const VertexSet& s,
                 const EnumerationBudget& budget);
Weight mu_circ(const BarrierDigraph& v, const VertexSet& s,
               const EnumerationBudget& budget);

// Minimum undirected spanning tree weight of the restriction to s, by edge
// subset enumeration.
Weight nu(const PotentialGraph& p, const VertexSet& s, const EnumerationBudget& budget);

}  // namespace bf::oracle
