#pragma once

#include <vector>

#include "bf/barrier_digraph.hpp"
#include "bf/forest.hpp"
#include "bf/potential_graph.hpp"
#include "bf/vertex_set.hpp"

namespace bf {

// Directed weight on a subset: sum of v_ij over arcs whose tail lies in S,
// regardless of where the head lies. Empty sum is 0.
Weight weight_on_set(const BarrierDigraph& host, const EnteringForest& f,
                     const VertexSet& s);
Weight weight_total(const BarrierDigraph& host, const EnteringForest& f);

// Same, for the digraph's own arcs.
Weight weight_on_set(const BarrierDigraph& g, const VertexSet& s);

// Undirected weight on a subset: sum of p_ij over edges with BOTH ends in S.
// Loops enter only when include_loops is set (forests never contain loops).
Weight weight_undirected(const PotentialGraph& host, const UndirectedForest& f,
                         const VertexSet& s);
Weight weight_undirected(const PotentialGraph& host, const UndirectedForest& f);
Weight weight_undirected(const PotentialGraph& g, const VertexSet& s,
                         bool include_loops = false);

// Restriction to S. Vertices are re-indexed by ascending original id; the
// sorted id list of S is the mapping back.
BarrierDigraph induced_subgraph(const BarrierDigraph& g, const VertexSet& s);
PotentialGraph induced_subgraph(const PotentialGraph& g, const VertexSet& s);
EnteringForest induced_subgraph(const EnteringForest& f, const VertexSet& s);

VertexSet out_neighborhood(const BarrierDigraph& g, const VertexSet& s);
VertexSet in_neighborhood(const BarrierDigraph& g, const VertexSet& s);
VertexSet out_neighborhood(const EnteringForest& f, const VertexSet& s);
VertexSet in_neighborhood(const EnteringForest& f, const VertexSet& s);

// Arcs out of D in f replaced by arcs out of D in g. The result is a plain
// parent vector: it is a forest only under the documented preconditions, so
// callers validate via EnteringForest::from_parents when they expect one.
std::vector<VertexId> replace_arcs(const EnteringForest& f, const EnteringForest& g,
                                   const VertexSet& d);

// Orientation transfer. orient() assigns one root per component and directs
// every edge toward it; orient_component() touches only the root's component,
// leaving all other vertices as isolated roots.
EnteringForest orient(const UndirectedForest& f, const std::vector<VertexId>& roots);
EnteringForest orient_component(const UndirectedForest& f, VertexId root);

UndirectedForest unorient(const EnteringForest& f);
// Checked variant: every arc must exist as an edge of p.
UndirectedForest unorient(const EnteringForest& f, const PotentialGraph& p);

// Transpose of the arc map. Involution.
BarrierDigraph reverse_arcs(const BarrierDigraph& v);

}  // namespace bf
