#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "dynamics.hpp"
#include "graph.hpp"
#include "line_field.hpp"
#include "simplify.hpp"

namespace dlf {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Graphviz rendering. Vertices are circles, faces boxes, edges (vector
/// field graphs only) diamonds; labels carry the index as n/2.
inline std::string to_dot(const TopologicalGraph& g, const std::string& name = "topological_graph") {
  std::ostringstream out;
  out << "graph " << detail::dot_quote(name) << " {\n";
  for (int dim : {kVertex, kEdge, kFace}) {
    for (const auto& n : g.nodes) {
      if (n.dim != dim) continue;
      const char* shape = dim == kVertex ? "circle" : dim == kEdge ? "diamond" : "box";
      out << "  " << detail::dot_quote(n.cell) << " [shape=" << shape << ", label="
          << detail::dot_quote(n.cell + " (idx=" + std::to_string(n.doubled_index) + "/2)") << "];\n";
    }
  }
  for (const auto& s : g.edges)
    out << "  " << detail::dot_quote(s.upper) << " -- " << detail::dot_quote(s.lower) << ";\n";
  out << "}\n";
  return out.str();
}

inline ordered_json complex_json(const SurfaceComplex& s) {
  ordered_json j;
  j["name"] = s.name;
  j["vertices"] = s.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& [e, ends] : s.edges) edges.push_back({{"id", e}, {"tail", ends.tail}, {"head", ends.head}});
  j["edges"] = edges;
  ordered_json faces = ordered_json::array();
  for (const auto& [f, w] : s.faces) {
    ordered_json walk = ordered_json::array();
    for (const auto& o : w) walk.push_back(o.str());
    faces.push_back({{"id", f}, {"walk", walk}});
  }
  j["faces"] = faces;
  return j;
}

inline ordered_json critical_json(const TopologicalGraph& g) {
  ordered_json arr = ordered_json::array();
  for (const auto& n : g.nodes) arr.push_back({{"cell", n.cell}, {"dim", n.dim}, {"doubled_index", n.doubled_index}});
  return arr;
}

inline ordered_json critical_json(const LineField& l) {
  ordered_json arr = ordered_json::array();
  for (const auto& [c, idx] : critical_cells(l))
    arr.push_back({{"cell", c}, {"dim", *l.complex.dim(c)}, {"doubled_index", idx.value}});
  return arr;
}

inline ordered_json separatrices_json(const TopologicalGraph& g) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : g.edges)
    arr.push_back({{"upper", s.upper}, {"lower", s.lower}, {"slot", s.slot}, {"path", s.path}, {"witnesses", s.witnesses}});
  return arr;
}

inline ordered_json corridor_json(const Corridor& c) {
  ordered_json crossings = ordered_json::array();
  for (const auto& x : c.crossings) crossings.push_back(x.edge);
  return {{"faces", c.faces}, {"crossings", crossings}, {"closed", c.closed}};
}

/// Full Morse-Smale report; all indices are doubled integers.
inline ordered_json decomposition_json(const LineField& l, const MsDecomposition& ms) {
  ordered_json j;
  j["complex"] = complex_json(l.complex);
  ordered_json matching = ordered_json::array();
  for (const auto& [v, e] : l.pairs) matching.push_back({{"vertex", v}, {"edge", e}});
  j["matching"] = matching;
  j["critical"] = critical_json(ms.graph);
  j["separatrices"] = separatrices_json(ms.graph);
  ordered_json corridors = ordered_json::array();
  for (const auto& c : ms.corridors) corridors.push_back(corridor_json(c));
  j["corridors"] = corridors;
  ordered_json closed = ordered_json::array();
  for (const auto& c : ms.closed_corridors) closed.push_back(corridor_json(c));
  j["closed_corridors"] = closed;
  j["periodic_component"] = ms.periodic();
  return j;
}

inline ordered_json correspondence_json(const CellCorrespondence& c) {
  ordered_json j = ordered_json::object();
  for (const auto& [from, to] : c.image) j[from] = to;
  return j;
}

/// Reads back the nodes and separatrix endpoints of an exported report.
inline TopologicalGraph graph_from_json(const nlohmann::json& j) {
  TopologicalGraph g;
  for (const auto& n : j.at("critical"))
    g.nodes.push_back({n.at("cell").get<std::string>(), n.at("dim").get<int>(), n.at("doubled_index").get<int>()});
  for (const auto& s : j.at("separatrices")) {
    Separatrix sep;
    sep.upper = s.at("upper").get<std::string>();
    sep.lower = s.at("lower").get<std::string>();
    sep.slot = s.at("slot").get<std::size_t>();
    sep.path = s.at("path").get<std::vector<std::string>>();
    sep.witnesses = s.at("witnesses").get<std::vector<std::string>>();
    g.edges.push_back(std::move(sep));
  }
  return g;
}

}  // namespace dlf
