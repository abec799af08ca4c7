#pragma once

#include <utility>
#include <vector>

#include "bf/common.hpp"

namespace bf {

// Reflexive weighted undirected graph: every vertex carries a loop weight
// p_ii, edges carry saddle weights p_ij. Dense symmetric storage; an absent
// edge reads as kInf. Connectivity is checked on demand, not at construction.
class PotentialGraph {
 public:
  PotentialGraph() = default;

  PotentialGraph(VertexId n, std::vector<Weight> loops)
      : n_(n), loop_(std::move(loops)),
        edge_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInf) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<VertexId>(loop_.size()) != n)
      throw std::invalid_argument("loop vector size mismatch");
    for (Weight w : loop_)
      if (!std::isfinite(w)) throw std::invalid_argument("loop weight must be finite");
  }

  static PotentialGraph uniform_loops(VertexId n, Weight loop) {
    return PotentialGraph(n, std::vector<Weight>(static_cast<std::size_t>(n), loop));
  }

  VertexId size() const { return n_; }

  Weight loop(VertexId i) const { return loop_[idx(i)]; }
  void set_loop(VertexId i, Weight w) {
    if (!std::isfinite(w)) throw std::invalid_argument("loop weight must be finite");
    loop_[idx(i)] = w;
  }
  const std::vector<Weight>& loops() const { return loop_; }

  bool has_edge(VertexId i, VertexId j) const { return edge_[at(i, j)] != kInf; }
  Weight edge(VertexId i, VertexId j) const { return edge_[at(i, j)]; }

  void set_edge(VertexId i, VertexId j, Weight w) {
    if (i == j) throw std::invalid_argument("loop weights are set via set_loop");
    if (!std::isfinite(w)) throw std::invalid_argument("edge weight must be finite");
    edge_[at(i, j)] = w;
    edge_[at(j, i)] = w;
  }

  void remove_edge(VertexId i, VertexId j) {
    if (i == j) throw std::invalid_argument("no loop edges");
    edge_[at(i, j)] = kInf;
    edge_[at(j, i)] = kInf;
  }

  // Unordered edge list, (i, j) with i < j, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId i = 0; i < n_; ++i)
      for (VertexId j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (VertexId i = 0; i < n_; ++i)
      for (VertexId j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) ++c;
    return c;
  }

  const Weight* edge_row(VertexId i) const {
    return edge_.data() + static_cast<std::size_t>(idx(i)) * static_cast<std::size_t>(n_);
  }

  bool connected() const;
  int component_count() const;

  bool operator==(const PotentialGraph&) const = default;

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
  std::vector<Weight> loop_;
  std::vector<Weight> edge_;
};

}  // namespace bf
