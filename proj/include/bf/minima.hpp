#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bf/barrier_digraph.hpp"
#include "bf/forest.hpp"
#include "bf/potential_graph.hpp"
#include "bf/vertex_set.hpp"

namespace bf {

// Minimum-weight undirected spanning tree of the restriction to S, by greedy
// edge selection sorted on (weight, smaller id, larger id). Disconnected
// restriction yields weight kInf and an empty forest.
struct NuResult {
  Weight weight = kInf;
  UndirectedForest tree;
};
NuResult nu(const PotentialGraph& p, const VertexSet& s);

// Minimum weight of an entering tree spanning S with root q.
Weight lambda_bullet(const PotentialGraph& p, const VertexSet& s, VertexId q);

// Minimum over all roots; attained at the vertex of minimal loop weight
// (smallest id on ties).
struct LambdaBullet {
  Weight value = kInf;
  VertexId root = -1;
};
LambdaBullet lambda_bullet_min(const PotentialGraph& p, const VertexSet& s);

// Minimum weight over entering trees spanning S plus exactly one outgoing
// boundary arc, with the boundary edge (from in S, to outside) attaining the
// minimal crossing potential. Lexicographic (from, to) on ties.
struct LambdaCirc {
  Weight value = kInf;
  VertexId from = -1;
  VertexId to = -1;
};
LambdaCirc lambda_circ(const PotentialGraph& p, const VertexSet& s);

// Per-exit-vertex variant: fixed tail q for the boundary arc.
Weight lambda_circ_q(const PotentialGraph& p, const BarrierDigraph& v,
                     const VertexSet& s, VertexId q);

// All subset minima from one spanning-tree computation plus boundary scans.
struct SubsetMinima {
  VertexSet s;
  Weight nu = kInf;
  std::vector<Weight> lambda_bullet_q;  // aligned with s.ids()
  Weight lambda_bullet = kInf;
  VertexId argmin_root = -1;
  std::vector<Weight> lambda_circ_q;  // aligned with s.ids()
  Weight lambda_circ = kInf;
  VertexId boundary_from = -1;
  VertexId boundary_to = -1;
};
SubsetMinima subset_minima(const PotentialGraph& p, const BarrierDigraph& v,
                           const VertexSet& s);

// Root of the tree that is cheapest to absorb next and the resulting forest
// weight increment. Assumes the forest is minimal with every tree rooted at
// its minimal-loop vertex (true for forests the contraction produces);
// minimality itself is the caller's responsibility.
struct DescentStep {
  VertexId root = -1;
  Weight increment = kInf;
};
DescentStep descent_increment(const PotentialGraph& p, const EnteringForest& f);

// Necessary-and-sufficient test that g is a minimal one-merge descendant of
// the minimal forest f. Throws if g is not descendant-shaped relative to f.
bool check_descent(const PotentialGraph& p, const EnteringForest& f,
                   const EnteringForest& g);

// Rooted-tree minimum of a merged vertex set from the two operand minima.
Weight merged_lambda(Weight lambda_x, Weight lambda_circ_y);

// Minimum-weight spanning k-forest of the undirected graph (greedy prefix).
// Weight kInf when the graph has more than k components.
struct UndirectedForestResult {
  Weight weight = kInf;
  UndirectedForest forest;
};
UndirectedForestResult min_undirected_forest(const PotentialGraph& p, int k);

// Full-graph rooted-minimum report from a single greedy spanning-tree
// computation: the tree, the minimal-loop root, and the rooted minimum for
// every root at once. Weight kInf and empty tree on disconnected input.
struct MstAllRoots {
  Weight nu = kInf;
  UndirectedForest tree;
  VertexId auto_root = -1;              // minimal loop, smallest id on ties
  std::vector<Weight> lambda_by_root;   // per vertex id; kInf if disconnected
};
MstAllRoots mst_all_roots(const PotentialGraph& p);

// Instrumentation: number of greedy spanning-tree computations performed.
std::uint64_t mst_run_count();
void reset_mst_run_count();

}  // namespace bf
