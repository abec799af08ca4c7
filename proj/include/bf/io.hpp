#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bf/barrier_digraph.hpp"
#include "bf/contraction.hpp"
#include "bf/forest.hpp"
#include "bf/potential_graph.hpp"

namespace bf::io {

// Parsed input file. Vertex ids are dense in order of first appearance in the
// file; labels carries the external names.
struct GraphFile {
  bool is_barrier = false;
  std::vector<std::string> labels;
  PotentialGraph potential;  // set when !is_barrier
  BarrierDigraph barrier;    // set when is_barrier
};

// JSON (sniffed by a leading '{') or the plain-text line format. Throws
// ParseError on malformed input.
GraphFile load_graph_file(const std::string& path);
GraphFile parse_graph_json(const std::string& text);
GraphFile parse_graph_text(const std::string& text);

// Canonical weight formatting: 17 significant digits, round-trip exact.
std::string format_weight(Weight w);

std::string write_potential_json(const PotentialGraph& p,
                                 const std::vector<std::string>& labels);
std::string write_barrier_json(const BarrierDigraph& v,
                               const std::vector<std::string>& labels);

// Hierarchy report. Deterministic given the input: fixed key order, fixed
// tie-breaks upstream, canonical number formatting. Timing is opt-in because
// it would break byte-level reproducibility.
struct HierarchyReportOptions {
  std::vector<int> forest_levels;  // which forest_at(k) to embed
  std::optional<double> timing_ms;
};
std::string write_hierarchy_json(const Dendrogram& d, const BarrierDigraph& v,
                                 const std::vector<std::string>& labels,
                                 const HierarchyReportOptions& opts,
                                 const std::vector<std::string>& warnings);

std::string write_forest_dot(const EnteringForest& f, const BarrierDigraph& v,
                             const std::vector<std::string>& labels, int k);

struct MstReport {
  VertexId root = -1;
  Weight weight = kInf;
  std::vector<std::pair<VertexId, VertexId>> tree_edges;
  std::vector<std::pair<VertexId, VertexId>> arcs;  // (tail, head)
  std::vector<Weight> lambda_by_root;               // per vertex id
};
std::string write_mst_json(const MstReport& r, const BarrierDigraph& v,
                           const std::vector<std::string>& labels);

std::string write_roadplan_json(const std::vector<MergeEvent>& plan,
                                const std::vector<std::string>& labels);

}  // namespace bf::io
