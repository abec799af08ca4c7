#pragma once

#include <span>
#include <utility>

#include "bf/barrier_digraph.hpp"
#include "bf/potential_graph.hpp"

namespace bf {

// v_ij = p_ij - p_ii for every edge; both directions materialized.
BarrierDigraph potential_to_barrier(const PotentialGraph& p);

// Loop recovery is fixed only up to a per-component shift; the anchor pins
// one vertex's loop value. Components not containing the anchor are pinned at
// their smallest vertex with loop 0.
struct Anchor {
  VertexId vertex = 0;
  Weight value = 0.0;
};

// Solves loops by spanning-tree propagation of p_jj - p_ii = v_ij - v_ji and
// sets p_ij = v_ij + p_ii. Every non-tree arc pair must satisfy the same
// relation within 1e-9 relative tolerance; otherwise the digraph was not
// derived from any potential and StructureError is thrown. Unpaired arcs also
// throw.
PotentialGraph recover_potential(const BarrierDigraph& v, Anchor anchor = {});

PotentialGraph shift_potential(const PotentialGraph& p, Weight d);

// Vertices are the strict local minima of the sampled 1-D potential (leftmost
// representative on plateaus, endpoints included); loops are the sampled
// values there; consecutive minima are joined by an edge weighted with the
// maximal sample between them. Throws ParseError on unsorted x or fewer than
// one minimum.
PotentialGraph ingest_potential_1d(std::span<const std::pair<double, double>> samples);

// Physical-potential flag: every loop strictly below all incident edges, i.e.
// all barriers positive. Informational; never enforced.
bool all_barriers_positive(const PotentialGraph& p);

}  // namespace bf
