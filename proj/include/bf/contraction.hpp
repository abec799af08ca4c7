#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bf/forest.hpp"
#include "bf/potential_graph.hpp"

namespace bf {

// One contraction step: the tree rooted at absorbed_root is re-rooted at
// witness_from and hung onto surviving_root's tree through the original edge
// (witness_from, witness_to).
struct MergeEvent {
  int k_before = 0;            // root count before the merge
  VertexId absorbed_root = -1;   // y
  VertexId surviving_root = -1;  // x
  VertexId witness_from = -1;    // a, inside the absorbed tree
  VertexId witness_to = -1;      // b, inside the surviving tree
  Weight barrier = kInf;         // p_ab
  Weight increment = kInf;       // p_ab - p_yy
  Weight phi_after = kInf;       // forest weight after the merge

  bool operator==(const MergeEvent&) const = default;
};

// Mutable state of the root-contraction loop: the contracted barrier and
// potential matrices over the current root set, with per-pair witness edges
// from the original graph. Matrix storage has fixed stride N; a slot swap
// with the last live index deletes an absorbed root in O(k).
class ContractionState {
 public:
  explicit ContractionState(const PotentialGraph& p);

  int original_size() const { return n_; }
  int root_count() const { return k_; }
  Weight total_weight() const { return upsilon_; }

  // Performs one merge. Returns nullopt when every remaining pair is
  // unreachable (all-infinite barrier matrix); throws when only one root
  // remains.
  std::optional<MergeEvent> step();

  // Introspection by original root id (live roots only).
  std::vector<VertexId> roots() const;
  Weight barrier_entry(VertexId root_l, VertexId root_i) const;
  Weight potential_entry(VertexId root_l, VertexId root_i) const;
  Weight loop_entry(VertexId root_l) const;
  std::pair<VertexId, VertexId> witness_entry(VertexId root_l, VertexId root_i) const;

 private:
  int slot_of(VertexId root) const;
  void fold_into(int sx, int sy);
  void remove_slot(int s);

  int n_ = 0;
  int k_ = 0;
  std::size_t cap_ = 0;  // row stride
  std::vector<Weight> pot_;
  std::vector<Weight> bar_;
  std::vector<Weight> loop_;
  std::vector<VertexId> wa_;  // witness tail, in the row root's tree
  std::vector<VertexId> wb_;  // witness head, in the column root's tree
  std::vector<VertexId> root_;  // slot -> original root id
  Weight upsilon_ = 0.0;
};

// Full merge history. phi(k) is the minimum k-forest weight; forests are
// reconstructed on demand from the event prefix, O(N) per query.
class Dendrogram {
 public:
  Dendrogram() = default;
  Dendrogram(int n, std::vector<MergeEvent> events);

  int size() const { return n_; }
  const std::vector<MergeEvent>& events() const { return events_; }

  // Smallest root count reached; 1 on connected inputs.
  int min_roots() const { return n_ - static_cast<int>(events_.size()); }
  bool complete() const { return min_roots() <= 1; }

  // phi(n) == 0; phi(k) == kInf below min_roots() (no such forest exists).
  Weight phi(int k) const;

  // Spanning entering forest with k trees; k must lie in [min_roots(), n].
  EnteringForest forest_at(int k) const;

  // Roots of forest_at(k), ascending, without materializing the forest.
  std::vector<VertexId> roots_at(int k) const;

 private:
  int n_ = 0;
  std::vector<MergeEvent> events_;
  std::vector<Weight> phi_;  // phi_[j] after j merges
};

// Runs the contraction from the empty spanning forest down to one root (or to
// exhaustion on disconnected inputs).
Dendrogram run_contraction(const PotentialGraph& p);

}  // namespace bf
