#pragma once

#include <tuple>
#include <vector>

#include "bf/common.hpp"

namespace bf {

// Loop-free weighted digraph of barriers v_ij. Dense storage; absent arcs
// read as kInf; the diagonal is always kInf. Arc weights may be negative.
class BarrierDigraph {
 public:
  BarrierDigraph() = default;

  explicit BarrierDigraph(VertexId n)
      : n_(n), arc_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInf) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  VertexId size() const { return n_; }

  bool has_arc(VertexId i, VertexId j) const { return arc_[at(i, j)] != kInf; }
  Weight arc(VertexId i, VertexId j) const { return arc_[at(i, j)]; }

  void set_arc(VertexId i, VertexId j, Weight w) {
    if (i == j) throw std::invalid_argument("barrier digraphs have no loops");
    if (!std::isfinite(w)) throw std::invalid_argument("arc weight must be finite");
    arc_[at(i, j)] = w;
  }

  void remove_arc(VertexId i, VertexId j) {
    if (i == j) throw std::invalid_argument("barrier digraphs have no loops");
    arc_[at(i, j)] = kInf;
  }

  std::vector<std::tuple<VertexId, VertexId, Weight>> arcs() const {
    std::vector<std::tuple<VertexId, VertexId, Weight>> out;
    for (VertexId i = 0; i < n_; ++i)
      for (VertexId j = 0; j < n_; ++j)
        if (i != j && has_arc(i, j)) out.emplace_back(i, j, arc(i, j));
    return out;
  }

  std::size_t arc_count() const {
    std::size_t c = 0;
    for (VertexId i = 0; i < n_; ++i)
      for (VertexId j = 0; j < n_; ++j)
        if (i != j && has_arc(i, j)) ++c;
    return c;
  }

  // Validation flag: (i,j) present iff (j,i) present. Digraphs derived from a
  // potential graph always satisfy this; arbitrary inputs may not.
  bool has_paired_arcs() const {
    for (VertexId i = 0; i < n_; ++i)
      for (VertexId j = i + 1; j < n_; ++j)
        if (has_arc(i, j) != has_arc(j, i)) return false;
    return true;
  }

  Weight min_arc_weight() const {
    Weight m = kInf;
    for (Weight w : arc_)
      if (w < m) m = w;
    return m;
  }

  const Weight* row(VertexId i) const {
    return arc_.data() + static_cast<std::size_t>(idx(i)) * static_cast<std::size_t>(n_);
  }

  bool operator==(const BarrierDigraph&) const = default;

 private:
  VertexId idx(VertexId i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("vertex id out of range");
    return i;
  }
  std::size_t at(VertexId i, VertexId j) const {
    return static_cast<std::size_t>(idx(i)) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(idx(j));
  }

  VertexId n_ = 0;
  std::vector<Weight> arc_;
};

}  // namespace bf
