#pragma once

#include <algorithm>
#include <vector>

#include "bf/common.hpp"

namespace bf {

// Subset of the dense vertex universe [0, n). Keeps a sorted id list plus a
// membership mask so both iteration and O(1) lookup are cheap.
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(VertexId universe, std::vector<VertexId> ids)
      : universe_(universe), ids_(std::move(ids)), mask_(universe, 0) {
    if (universe < 0) throw std::invalid_argument("negative universe");
    std::sort(ids_.begin(), ids_.end());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      VertexId v = ids_[i];
      if (v < 0 || v >= universe_)
        throw std::invalid_argument("vertex id out of range");
      if (i > 0 && ids_[i - 1] == v)
        throw std::invalid_argument("duplicate vertex id");
      mask_[static_cast<std::size_t>(v)] = 1;
    }
  }

  static VertexSet full(VertexId universe) {
    std::vector<VertexId> ids(static_cast<std::size_t>(universe));
    for (VertexId v = 0; v < universe; ++v) ids[static_cast<std::size_t>(v)] = v;
    return VertexSet(universe, std::move(ids));
  }

  static VertexSet none(VertexId universe) { return VertexSet(universe, {}); }

  bool contains(VertexId v) const {
    return v >= 0 && v < universe_ && mask_[static_cast<std::size_t>(v)] != 0;
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  VertexId universe() const { return universe_; }
  bool is_full() const { return size() == universe_; }

  const std::vector<VertexId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  VertexSet complement() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(universe_ - size()));
    for (VertexId v = 0; v < universe_; ++v)
      if (!mask_[static_cast<std::size_t>(v)]) out.push_back(v);
    return VertexSet(universe_, std::move(out));
  }

  bool operator==(const VertexSet&) const = default;

 private:
  VertexId universe_ = 0;
  std::vector<VertexId> ids_;
  std::vector<char> mask_;
};

}  // namespace bf
