#include "bf/conversion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bf {

namespace {

constexpr double kRecoverTol = 1e-9;  // relative

bool close_rel(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kRecoverTol * scale;
}

}  // namespace

BarrierDigraph potential_to_barrier(const PotentialGraph& p) {
  BarrierDigraph v(p.size());
  for (auto [i, j] : p.edges()) {
    v.set_arc(i, j, p.edge(i, j) - p.loop(i));
    v.set_arc(j, i, p.edge(i, j) - p.loop(j));
  }
  return v;
}

PotentialGraph recover_potential(const BarrierDigraph& v, Anchor anchor) {
  const VertexId n = v.size();
  if (n == 0) return PotentialGraph(0, {});
  if (anchor.vertex < 0 || anchor.vertex >= n)
    throw std::invalid_argument("anchor vertex out of range");
  if (!std::isfinite(anchor.value))
    throw std::invalid_argument("anchor value must be finite");
  if (!v.has_paired_arcs())
    throw StructureError("arc (i,j) present without its pair (j,i): not a barrier digraph");

  // Loops by spanning-tree propagation of p_jj - p_ii = v_ij - v_ji, one BFS
  // per component; the anchored component starts from the anchor.
  std::vector<Weight> loops(static_cast<std::size_t>(n), kInf);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> queue;
  auto bfs_from = [&](VertexId start, Weight value) {
    queue.clear();
    queue.push_back(start);
    seen[static_cast<std::size_t>(start)] = 1;
    loops[static_cast<std::size_t>(start)] = value;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId i = queue[head];
      for (VertexId j = 0; j < n; ++j) {
        if (seen[static_cast<std::size_t>(j)] || !v.has_arc(i, j)) continue;
        seen[static_cast<std::size_t>(j)] = 1;
        loops[static_cast<std::size_t>(j)] =
            loops[static_cast<std::size_t>(i)] + (v.arc(i, j) - v.arc(j, i));
        queue.push_back(j);
      }
    }
  };
  bfs_from(anchor.vertex, anchor.value);
  for (VertexId s = 0; s < n; ++s)
    if (!seen[static_cast<std::size_t>(s)]) bfs_from(s, 0.0);

  PotentialGraph p(n, std::move(loops));
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) {
      if (!v.has_arc(i, j)) continue;
      // Every arc pair must agree on the implied edge weight.
      Weight from_i = v.arc(i, j) + p.loop(i);
      Weight from_j = v.arc(j, i) + p.loop(j);
      if (!close_rel(from_i, from_j))
        throw StructureError("barrier digraph is inconsistent: no potential exists");
      p.set_edge(i, j, from_i);
    }
  return p;
}

PotentialGraph shift_potential(const PotentialGraph& p, Weight d) {
  std::vector<Weight> loops = p.loops();
  for (Weight& w : loops) w += d;
  PotentialGraph out(p.size(), std::move(loops));
  for (auto [i, j] : p.edges()) out.set_edge(i, j, p.edge(i, j) + d);
  return out;
}

PotentialGraph ingest_potential_1d(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) throw ParseError("need at least three samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].first) || !std::isfinite(samples[i].second))
      throw ParseError("samples must be finite");
    if (i > 0 && samples[i].first <= samples[i - 1].first)
      throw ParseError("sample positions must be strictly increasing");
  }

  // Strict local minima over maximal runs of equal values; plateau minima are
  // represented by their leftmost sample, boundary runs count.
  std::vector<std::size_t> minima;
  std::size_t i = 0;
  const std::size_t n = samples.size();
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && samples[j + 1].second == samples[i].second) ++j;
    const bool left_higher = (i == 0) || (samples[i - 1].second > samples[i].second);
    const bool right_higher = (j == n - 1) || (samples[j + 1].second > samples[j].second);
    if (left_higher && right_higher) minima.push_back(i);
    i = j + 1;
  }
  if (minima.empty()) throw ParseError("no local minimum in samples");

  std::vector<Weight> loops;
  loops.reserve(minima.size());
  for (std::size_t m : minima) loops.push_back(samples[m].second);
  PotentialGraph out(static_cast<VertexId>(minima.size()), std::move(loops));
  for (std::size_t e = 0; e + 1 < minima.size(); ++e) {
    Weight saddle = -kInf;
    for (std::size_t t = minima[e] + 1; t < minima[e + 1]; ++t)
      saddle = std::max(saddle, samples[t].second);
    out.set_edge(static_cast<VertexId>(e), static_cast<VertexId>(e + 1), saddle);
  }
  return out;
}

bool all_barriers_positive(const PotentialGraph& p) {
  for (auto [i, j] : p.edges())
    if (p.edge(i, j) <= p.loop(i) || p.edge(i, j) <= p.loop(j)) return false;
  return true;
}

}  // namespace bf
