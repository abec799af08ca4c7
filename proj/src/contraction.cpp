#include "bf/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "bf/kernels.hpp"

namespace bf {

ContractionState::ContractionState(const PotentialGraph& p)
    : n_(p.size()),
      k_(p.size()),
      cap_(static_cast<std::size_t>(p.size())),
      pot_(cap_ * cap_, kInf),
      bar_(cap_ * cap_, kInf),
      loop_(p.loops()),
      wa_(cap_ * cap_, -1),
      wb_(cap_ * cap_, -1),
      root_(cap_) {
  std::iota(root_.begin(), root_.end(), 0);
  for (VertexId i = 0; i < n_; ++i) {
    const std::size_t row = static_cast<std::size_t>(i) * cap_;
    kernels::sub_scalar(bar_.data() + row, p.edge_row(i), p.loop(i), cap_);
    bar_[row + static_cast<std::size_t>(i)] = kInf;
    for (VertexId j = 0; j < n_; ++j) {
      if (i == j || !p.has_edge(i, j)) continue;
      pot_[row + static_cast<std::size_t>(j)] = p.edge(i, j);
      wa_[row + static_cast<std::size_t>(j)] = i;
      wb_[row + static_cast<std::size_t>(j)] = j;
    }
  }
}

int ContractionState::slot_of(VertexId root) const {
  for (int s = 0; s < k_; ++s)
    if (root_[static_cast<std::size_t>(s)] == root) return s;
  throw std::invalid_argument("not a live root");
}

std::vector<VertexId> ContractionState::roots() const {
  std::vector<VertexId> out(root_.begin(), root_.begin() + k_);
  std::sort(out.begin(), out.end());
  return out;
}

Weight ContractionState::barrier_entry(VertexId root_l, VertexId root_i) const {
  return bar_[static_cast<std::size_t>(slot_of(root_l)) * cap_ +
              static_cast<std::size_t>(slot_of(root_i))];
}

Weight ContractionState::potential_entry(VertexId root_l, VertexId root_i) const {
  return pot_[static_cast<std::size_t>(slot_of(root_l)) * cap_ +
              static_cast<std::size_t>(slot_of(root_i))];
}

Weight ContractionState::loop_entry(VertexId root_l) const {
  return loop_[static_cast<std::size_t>(slot_of(root_l))];
}

std::pair<VertexId, VertexId> ContractionState::witness_entry(VertexId root_l,
                                                              VertexId root_i) const {
  std::size_t at = static_cast<std::size_t>(slot_of(root_l)) * cap_ +
                   static_cast<std::size_t>(slot_of(root_i));
  return {wa_[at], wb_[at]};
}

std::optional<MergeEvent> ContractionState::step() {
  if (k_ <= 1) throw std::logic_error("contraction already complete");
  const std::size_t k = static_cast<std::size_t>(k_);

  // a) minimum barrier entry over the live block.
  Weight m = kInf;
  for (std::size_t l = 0; l < k; ++l)
    m = std::min(m, kernels::min_value(bar_.data() + l * cap_, k));
  if (!is_present(m)) return std::nullopt;  // remaining roots are unreachable

  // Tie resolution: lexicographically smallest (absorbed, surviving) pair of
  // original root ids among all entries attaining the minimum.
  int sy = -1, sx = -1;
  VertexId best_y = -1, best_x = -1;
  for (std::size_t l = 0; l < k; ++l) {
    const double* row = bar_.data() + l * cap_;
    for (std::size_t j = kernels::find_next_equal(row, k, 0, m); j < k;
         j = kernels::find_next_equal(row, k, j + 1, m)) {
      VertexId oy = root_[l], ox = root_[j];
      if (sy < 0 || std::make_pair(oy, ox) < std::make_pair(best_y, best_x)) {
        best_y = oy;
        best_x = ox;
        sy = static_cast<int>(l);
        sx = static_cast<int>(j);
      }
    }
  }

  const std::size_t at_yx = static_cast<std::size_t>(sy) * cap_ + static_cast<std::size_t>(sx);
  MergeEvent ev;
  ev.k_before = k_;
  ev.absorbed_root = best_y;
  ev.surviving_root = best_x;
  ev.witness_from = wa_[at_yx];
  ev.witness_to = wb_[at_yx];
  ev.barrier = pot_[at_yx];
  ev.increment = ev.barrier - loop_[static_cast<std::size_t>(sy)];
  upsilon_ += ev.increment;
  ev.phi_after = upsilon_;

  fold_into(sx, sy);
  remove_slot(sy);
  --k_;
  return ev;
}

// d) fold the absorbed slot's row/column into the survivor: potential entries
// take the pairwise minimum with witness carried along, then the barrier
// entries incident to the survivor are recomputed from the new potentials.
void ContractionState::fold_into(int sx, int sy) {
  const std::size_t k = static_cast<std::size_t>(k_);
  const std::size_t ux = static_cast<std::size_t>(sx);
  const std::size_t uy = static_cast<std::size_t>(sy);
  for (std::size_t l = 0; l < k; ++l) {
    if (l == ux || l == uy) continue;
    const std::size_t lx = l * cap_ + ux;
    const std::size_t ly = l * cap_ + uy;
    bool take_y;
    if (pot_[ly] < pot_[lx]) {
      take_y = true;
    } else if (pot_[lx] < pot_[ly]) {
      take_y = false;
    } else if (!is_present(pot_[lx])) {
      take_y = false;  // both absent
    } else {
      // equal weights: keep the lexicographically smaller witness edge
      take_y = std::make_pair(wa_[ly], wb_[ly]) < std::make_pair(wa_[lx], wb_[lx]);
    }
    if (take_y) {
      pot_[lx] = pot_[ly];
      wa_[lx] = wa_[ly];
      wb_[lx] = wb_[ly];
    }
    // mirror into the survivor's row, flipping the witness orientation
    const std::size_t xl = ux * cap_ + l;
    pot_[xl] = pot_[lx];
    wa_[xl] = wb_[lx];
    wb_[xl] = wa_[lx];
    bar_[lx] = pot_[lx] - loop_[l];
  }
  kernels::sub_scalar(bar_.data() + ux * cap_, pot_.data() + ux * cap_, loop_[ux], k);
  bar_[ux * cap_ + ux] = kInf;
}

void ContractionState::remove_slot(int s) {
  const std::size_t last = static_cast<std::size_t>(k_) - 1;
  const std::size_t us = static_cast<std::size_t>(s);
  if (us == last) return;
  const std::size_t k = static_cast<std::size_t>(k_);
  auto swap_rows_cols = [&](auto& mat) {
    std::swap_ranges(mat.begin() + static_cast<std::ptrdiff_t>(us * cap_),
                     mat.begin() + static_cast<std::ptrdiff_t>(us * cap_ + k),
                     mat.begin() + static_cast<std::ptrdiff_t>(last * cap_));
    for (std::size_t r = 0; r < k; ++r)
      std::swap(mat[r * cap_ + us], mat[r * cap_ + last]);
  };
  swap_rows_cols(pot_);
  swap_rows_cols(bar_);
  swap_rows_cols(wa_);
  swap_rows_cols(wb_);
  std::swap(loop_[us], loop_[last]);
  std::swap(root_[us], root_[last]);
}

Dendrogram::Dendrogram(int n, std::vector<MergeEvent> events)
    : n_(n), events_(std::move(events)) {
  phi_.reserve(events_.size() + 1);
  phi_.push_back(0.0);
  for (const auto& ev : events_) phi_.push_back(ev.phi_after);
}

Weight Dendrogram::phi(int k) const {
  if (k < 1 || k > std::max(n_, 1)) throw std::invalid_argument("level out of range");
  if (n_ == 0) return 0.0;
  if (k < min_roots()) return kInf;
  return phi_[static_cast<std::size_t>(n_ - k)];
}

EnteringForest Dendrogram::forest_at(int k) const {
  if (k < min_roots() || k > n_) throw std::invalid_argument("level out of range");
  const std::size_t merges = static_cast<std::size_t>(n_ - k);

  // Union-find over the event prefix, tracking each component's current root.
  std::vector<VertexId> uf(static_cast<std::size_t>(n_));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](VertexId x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] =
          uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<VertexId> comp_root(static_cast<std::size_t>(n_));
  std::iota(comp_root.begin(), comp_root.end(), 0);
  std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < merges; ++i) {
    const MergeEvent& ev = events_[i];
    VertexId keep = comp_root[static_cast<std::size_t>(find(ev.witness_to))];
    uf[static_cast<std::size_t>(find(ev.witness_from))] = find(ev.witness_to);
    comp_root[static_cast<std::size_t>(find(ev.witness_to))] = keep;
    adj[static_cast<std::size_t>(ev.witness_from)].push_back(ev.witness_to);
    adj[static_cast<std::size_t>(ev.witness_to)].push_back(ev.witness_from);
  }

  // Orient each component's edges toward its root.
  std::vector<VertexId> parent(static_cast<std::size_t>(n_), EnteringForest::kNoParent);
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n_; ++v) {
    if (comp_root[static_cast<std::size_t>(find(v))] != v) continue;
    stack.push_back(v);
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
    }
  }
  return EnteringForest::from_parents(std::move(parent));
}

std::vector<VertexId> Dendrogram::roots_at(int k) const {
  if (k < min_roots() || k > n_) throw std::invalid_argument("level out of range");
  std::vector<char> absorbed(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_ - k); ++i)
    absorbed[static_cast<std::size_t>(events_[i].absorbed_root)] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v)
    if (!absorbed[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

Dendrogram run_contraction(const PotentialGraph& p) {
  ContractionState state(p);
  std::vector<MergeEvent> events;
  events.reserve(static_cast<std::size_t>(std::max(0, p.size() - 1)));
  while (state.root_count() > 1) {
    auto ev = state.step();
    if (!ev) break;
    events.push_back(*ev);
  }
  return Dendrogram(p.size(), std::move(events));
}

}  // namespace bf
