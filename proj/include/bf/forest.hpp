#pragma once

#include <utility>
#include <vector>

#include "bf/common.hpp"

namespace bf {

// Spanning entering forest: at most one outgoing arc per vertex, no contours.
// Encoded as a parent vector; parent(v) is the head of v's unique outgoing
// arc, kNoParent for roots. Arcs point toward roots.
class EnteringForest {
 public:
  static constexpr VertexId kNoParent = -1;

  EnteringForest() = default;

  // Empty forest: every vertex is a root.
  explicit EnteringForest(VertexId n)
      : parent_(static_cast<std::size_t>(n), kNoParent) {}

  // Validates acyclicity; throws StructureError on a contour or a bad id.
  static EnteringForest from_parents(std::vector<VertexId> parent);

  VertexId size() const { return static_cast<VertexId>(parent_.size()); }

  VertexId parent(VertexId v) const { return parent_[check(v)]; }
  bool is_root(VertexId v) const { return parent_[check(v)] == kNoParent; }

  const std::vector<VertexId>& parents() const { return parent_; }

  std::vector<VertexId> roots() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < size(); ++v)
      if (parent_[static_cast<std::size_t>(v)] == kNoParent) out.push_back(v);
    return out;
  }

  int root_count() const { return static_cast<int>(roots().size()); }
  int arc_count() const { return static_cast<int>(size()) - root_count(); }

  // Per-vertex root of the containing tree. O(N).
  std::vector<VertexId> tree_root_of() const;

  std::vector<VertexId> tree_vertices(VertexId root) const;

  bool operator==(const EnteringForest&) const = default;

 private:
  std::size_t check(VertexId v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("vertex id out of range");
    return static_cast<std::size_t>(v);
  }

  std::vector<VertexId> parent_;
};

// Acyclic undirected graph over [0, n). Edges normalized to (min, max) and
// kept sorted; validation rejects duplicate edges and cycles.
class UndirectedForest {
 public:
  UndirectedForest() = default;
  explicit UndirectedForest(VertexId n) : n_(n) {}

  static UndirectedForest from_edges(VertexId n,
                                     std::vector<std::pair<VertexId, VertexId>> edges);

  VertexId size() const { return n_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int component_count() const { return static_cast<int>(n_) - edge_count(); }

  bool has_edge(VertexId i, VertexId j) const;

  // Per-vertex component representative (smallest id in the component).
  std::vector<VertexId> component_of() const;

  std::vector<VertexId> component_vertices(VertexId member) const;

  bool operator==(const UndirectedForest&) const = default;

 private:
  VertexId n_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

}  // namespace bf
