#include "bf/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bf::io {

namespace {

using nlohmann::json;

VertexId lookup(const std::map<std::string, VertexId>& index, const std::string& label) {
  auto it = index.find(label);
  if (it == index.end()) throw ParseError("unknown node id: " + label);
  return it->second;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  double x = j.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

std::string node_id(const json& j) {
  if (!j.is_string()) throw ParseError("node id must be a string");
  return j.get<std::string>();
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

}  // namespace

std::string format_weight(Weight w) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

GraphFile parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
    throw ParseError("expected an object with a \"nodes\" array");
  const bool has_edges = doc.contains("edges");
  const bool has_arcs = doc.contains("arcs");
  if (has_edges == has_arcs)
    throw ParseError("expected exactly one of \"edges\" (potential) or \"arcs\" (barrier)");

  GraphFile out;
  out.is_barrier = has_arcs;
  std::map<std::string, VertexId> index;
  std::vector<Weight> loops;
  for (const auto& node : doc["nodes"]) {
    if (!node.is_object()) throw ParseError("node entries must be objects");
    std::string id = node_id(node.at("id"));
    if (index.count(id)) throw ParseError("duplicate node id: " + id);
    index[id] = static_cast<VertexId>(out.labels.size());
    out.labels.push_back(id);
    if (out.is_barrier) {
      if (node.contains("loop"))
        throw ParseError("barrier nodes carry no loop weight (node " + id + ")");
    } else {
      if (!node.contains("loop")) throw ParseError("potential node missing loop: " + id);
      loops.push_back(finite_number(node["loop"], "loop"));
    }
  }
  const VertexId n = static_cast<VertexId>(out.labels.size());

  if (out.is_barrier) {
    out.barrier = BarrierDigraph(n);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& arc : doc["arcs"]) {
      if (!arc.is_object()) throw ParseError("arc entries must be objects");
      VertexId from = lookup(index, node_id(arc.at("from")));
      VertexId to = lookup(index, node_id(arc.at("to")));
      if (from == to) throw ParseError("arc endpoints must differ");
      if (!seen.insert({from, to}).second) throw ParseError("duplicate arc");
      out.barrier.set_arc(from, to, finite_number(arc.at("v"), "arc weight"));
    }
  } else {
    out.potential = PotentialGraph(n, std::move(loops));
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& edge : doc["edges"]) {
      if (!edge.is_object()) throw ParseError("edge entries must be objects");
      VertexId a = lookup(index, node_id(edge.at("a")));
      VertexId b = lookup(index, node_id(edge.at("b")));
      if (a == b) throw ParseError("edge endpoints must differ (loops go on nodes)");
      auto key = std::minmax(a, b);
      if (!seen.insert({key.first, key.second}).second) throw ParseError("duplicate edge");
      out.potential.set_edge(a, b, finite_number(edge.at("p"), "edge weight"));
    }
  }
  return out;
}

GraphFile parse_graph_text(const std::string& text) {
  struct EdgeLine {
    std::string a, b;
    Weight w;
  };
  std::vector<EdgeLine> edges;
  GraphFile out;
  out.is_barrier = false;
  std::map<std::string, VertexId> index;
  std::vector<Weight> loops;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (kind == "node") {
      std::string id;
      double loop;
      if (!(ls >> id >> loop) || !std::isfinite(loop)) fail("expected: node <id> <loop>");
      if (index.count(id)) fail("duplicate node id: " + id);
      index[id] = static_cast<VertexId>(out.labels.size());
      out.labels.push_back(id);
      loops.push_back(loop);
    } else if (kind == "edge") {
      EdgeLine e;
      if (!(ls >> e.a >> e.b >> e.w) || !std::isfinite(e.w))
        fail("expected: edge <i> <j> <w>");
      edges.push_back(std::move(e));
    } else {
      fail("unknown directive: " + kind);
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  out.potential = PotentialGraph(static_cast<VertexId>(out.labels.size()), std::move(loops));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : edges) {
    VertexId a = lookup(index, e.a);
    VertexId b = lookup(index, e.b);
    if (a == b) throw ParseError("edge endpoints must differ (loops go on nodes)");
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) throw ParseError("duplicate edge");
    out.potential.set_edge(a, b, e.w);
  }
  return out;
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input file: " + path);
  return text[first] == '{' ? parse_graph_json(text) : parse_graph_text(text);
}

std::string write_potential_json(const PotentialGraph& p,
                                 const std::vector<std::string>& labels) {
  std::string out = "{\"edges\":[";
  bool first = true;
  for (auto [i, j] : p.edges()) {
    if (!first) out += ",";
    first = false;
    out += "{\"a\":" + quoted(labels[static_cast<std::size_t>(i)]) +
           ",\"b\":" + quoted(labels[static_cast<std::size_t>(j)]) +
           ",\"p\":" + format_weight(p.edge(i, j)) + "}";
  }
  out += "],\"nodes\":[";
  for (VertexId v = 0; v < p.size(); ++v) {
    if (v) out += ",";
    out += "{\"id\":" + quoted(labels[static_cast<std::size_t>(v)]) +
           ",\"loop\":" + format_weight(p.loop(v)) + "}";
  }
  out += "]}\n";
  return out;
}

std::string write_barrier_json(const BarrierDigraph& v,
                               const std::vector<std::string>& labels) {
  std::string out = "{\"arcs\":[";
  bool first = true;
  for (auto [i, j, w] : v.arcs()) {
    if (!first) out += ",";
    first = false;
    out += "{\"from\":" + quoted(labels[static_cast<std::size_t>(i)]) +
           ",\"to\":" + quoted(labels[static_cast<std::size_t>(j)]) +
           ",\"v\":" + format_weight(w) + "}";
  }
  out += "],\"nodes\":[";
  for (VertexId i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += "{\"id\":" + quoted(labels[static_cast<std::size_t>(i)]) + "}";
  }
  out += "]}\n";
  return out;
}

namespace {

std::string forest_json(const Dendrogram& d, const BarrierDigraph& v,
                        const std::vector<std::string>& labels, int k) {
  EnteringForest f = d.forest_at(k);
  std::string out = "{\"arcs\":[";
  bool first = true;
  for (VertexId t = 0; t < f.size(); ++t) {
    VertexId h = f.parent(t);
    if (h == EnteringForest::kNoParent) continue;
    if (!first) out += ",";
    first = false;
    out += "{\"from\":" + quoted(labels[static_cast<std::size_t>(t)]) +
           ",\"to\":" + quoted(labels[static_cast<std::size_t>(h)]) +
           ",\"v\":" + format_weight(v.arc(t, h)) + "}";
  }
  out += "],\"k\":" + std::to_string(k) + ",\"roots\":[";
  first = true;
  for (VertexId r : f.roots()) {
    if (!first) out += ",";
    first = false;
    out += quoted(labels[static_cast<std::size_t>(r)]);
  }
  out += "]}";
  return out;
}

}  // namespace

std::string write_hierarchy_json(const Dendrogram& d, const BarrierDigraph& v,
                                 const std::vector<std::string>& labels,
                                 const HierarchyReportOptions& opts,
                                 const std::vector<std::string>& warnings) {
  std::string out = "{\"events\":[";
  for (std::size_t i = 0; i < d.events().size(); ++i) {
    const MergeEvent& ev = d.events()[i];
    if (i) out += ",";
    out += "{\"a\":" + quoted(labels[static_cast<std::size_t>(ev.witness_from)]) +
           ",\"b\":" + quoted(labels[static_cast<std::size_t>(ev.witness_to)]) +
           ",\"barrier\":" + format_weight(ev.barrier) +
           ",\"increment\":" + format_weight(ev.increment) +
           ",\"k_after\":" + std::to_string(ev.k_before - 1) +
           ",\"k_before\":" + std::to_string(ev.k_before) +
           ",\"phi_after\":" + format_weight(ev.phi_after) +
           ",\"x\":" + quoted(labels[static_cast<std::size_t>(ev.surviving_root)]) +
           ",\"y\":" + quoted(labels[static_cast<std::size_t>(ev.absorbed_root)]) + "}";
  }
  out += "],\"forests\":[";
  bool first = true;
  for (int k : opts.forest_levels) {
    if (!first) out += ",";
    first = false;
    out += forest_json(d, v, labels, k);
  }
  out += "],\"k_min\":" + std::to_string(d.min_roots());
  out += ",\"labels\":[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += quoted(labels[i]);
  }
  out += "],\"n\":" + std::to_string(d.size());
  out += ",\"phi\":[";
  for (int k = d.size(); k >= d.min_roots(); --k) {
    if (k != d.size()) out += ",";
    out += "{\"k\":" + std::to_string(k) + ",\"phi\":" + format_weight(d.phi(k)) + "}";
  }
  out += "],\"schema\":\"hierarchy-report-v1\"";
  if (opts.timing_ms) out += ",\"timing_ms\":" + format_weight(*opts.timing_ms);
  out += ",\"warnings\":[";
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (i) out += ",";
    out += quoted(warnings[i]);
  }
  out += "]}\n";
  return out;
}

std::string write_forest_dot(const EnteringForest& f, const BarrierDigraph& v,
                             const std::vector<std::string>& labels, int k) {
  std::string out = "digraph forest_k" + std::to_string(k) + " {\n";
  for (VertexId t = 0; t < f.size(); ++t)
    if (f.is_root(t)) out += "  " + quoted(labels[static_cast<std::size_t>(t)]) + ";\n";
  for (VertexId t = 0; t < f.size(); ++t) {
    VertexId h = f.parent(t);
    if (h == EnteringForest::kNoParent) continue;
    out += "  " + quoted(labels[static_cast<std::size_t>(t)]) + " -> " +
           quoted(labels[static_cast<std::size_t>(h)]) +
           " [label=" + quoted(format_weight(v.arc(t, h))) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string write_mst_json(const MstReport& r, const BarrierDigraph& v,
                           const std::vector<std::string>& labels) {
  std::string out = "{\"arcs\":[";
  bool first = true;
  for (auto [tail, head] : r.arcs) {
    if (!first) out += ",";
    first = false;
    out += "{\"from\":" + quoted(labels[static_cast<std::size_t>(tail)]) +
           ",\"to\":" + quoted(labels[static_cast<std::size_t>(head)]) +
           ",\"v\":" + format_weight(v.arc(tail, head)) + "}";
  }
  out += "],\"lambda_by_root\":[";
  for (std::size_t q = 0; q < r.lambda_by_root.size(); ++q) {
    if (q) out += ",";
    out += "{\"root\":" + quoted(labels[q]) +
           ",\"weight\":" + format_weight(r.lambda_by_root[q]) + "}";
  }
  out += "],\"root\":" + quoted(labels[static_cast<std::size_t>(r.root)]);
  out += ",\"schema\":\"mst-report-v1\",\"tree_edges\":[";
  first = true;
  for (auto [a, b] : r.tree_edges) {
    if (!first) out += ",";
    first = false;
    out += "[" + quoted(labels[static_cast<std::size_t>(a)]) + "," +
           quoted(labels[static_cast<std::size_t>(b)]) + "]";
  }
  out += "],\"weight\":" + format_weight(r.weight) + "}\n";
  return out;
}

std::string write_roadplan_json(const std::vector<MergeEvent>& plan,
                                const std::vector<std::string>& labels) {
  std::string out =
      "{\"note\":\"completing all n-1 roads also minimizes total direct cost\","
      "\"plan\":[";
  Weight cumulative = 0.0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const MergeEvent& ev = plan[i];
    cumulative += ev.increment;
    if (i) out += ",";
    out += "{\"cumulative_effective\":" + format_weight(cumulative) +
           ",\"direct_cost\":" + format_weight(ev.barrier) +
           ",\"effective_cost\":" + format_weight(ev.increment) +
           ",\"road\":[" + quoted(labels[static_cast<std::size_t>(ev.witness_from)]) + "," +
           quoted(labels[static_cast<std::size_t>(ev.witness_to)]) + "]" +
           ",\"step\":" + std::to_string(i + 1) + "}";
  }
  out += "],\"schema\":\"roadplan-v1\"}\n";
  return out;
}

}  // namespace bf::io
