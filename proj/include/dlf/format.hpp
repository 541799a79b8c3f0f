#pragma once

// Line-oriented native format:
//
//   surface <name>
//   vertex <id>
//   edge <id> <tail> <head>
//   face <id> walk <+e|-e> ...
//   match <vertex> <edge>          (line field pairs)
//   vmatch <lower> <upper>         (vector field pairs)
//
// Sections appear in the order above; `#` starts a comment.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace dlf {

struct Document {
  SurfaceComplex complex;
  std::vector<std::pair<CellId, CellId>> matches;   // (vertex, edge)
  std::vector<std::pair<CellId, CellId>> vmatches;  // (lower, upper)
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int section_rank(const std::string& kw) {
  if (kw == "surface") return 0;
  if (kw == "vertex") return 1;
  if (kw == "edge") return 2;
  if (kw == "face") return 3;
  if (kw == "match") return 4;
  if (kw == "vmatch") return 5;
  return -1;
}

}  // namespace detail

inline Document parse_document(const std::string& text) {
  Document doc;
  auto& s = doc.complex;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  int rank = -1;
  bool named = false;

  auto need_new_id = [&](const std::string& id) {
    if (s.contains(id)) throw FormatError(lineno, "duplicate identifier '" + id + "'");
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tok = detail::split_tokens(raw);
    if (tok.empty()) continue;
    const int r = detail::section_rank(tok[0]);
    if (r < 0) throw FormatError(lineno, "unknown keyword '" + tok[0] + "'");
    if (r < rank) throw FormatError(lineno, "'" + tok[0] + "' line out of section order");
    if (r == 5 && rank == 4) throw FormatError(lineno, "a file may hold match lines or vmatch lines, not both");
    rank = r;

    if (tok[0] == "surface") {
      if (tok.size() != 2) throw FormatError(lineno, "expected: surface <name>");
      if (named) throw FormatError(lineno, "duplicate surface line");
      s.name = tok[1];
      named = true;
    } else if (tok[0] == "vertex") {
      if (tok.size() != 2) throw FormatError(lineno, "expected: vertex <id>");
      need_new_id(tok[1]);
      s.vertices.insert(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw FormatError(lineno, "expected: edge <id> <tail> <head>");
      need_new_id(tok[1]);
      for (int k : {2, 3})
        if (!s.vertices.count(tok[k])) throw FormatError(lineno, "edge references undeclared vertex '" + tok[k] + "'");
      s.edges[tok[1]] = {tok[2], tok[3]};
    } else if (tok[0] == "face") {
      if (tok.size() < 3 || tok[2] != "walk") throw FormatError(lineno, "expected: face <id> walk <+e|-e> ...");
      need_new_id(tok[1]);
      Walk w;
      for (std::size_t k = 3; k < tok.size(); ++k) {
        const auto& o = tok[k];
        if (o.size() < 2 || (o[0] != '+' && o[0] != '-'))
          throw FormatError(lineno, "malformed occurrence '" + o + "' (expected +id or -id)");
        const CellId e = o.substr(1);
        if (!s.edges.count(e)) throw FormatError(lineno, "walk references undeclared edge '" + e + "'");
        w.push_back({e, o[0] == '+'});
      }
      s.faces[tok[1]] = canonical_rotation(w);
    } else if (tok[0] == "match") {
      if (tok.size() != 3) throw FormatError(lineno, "expected: match <vertex> <edge>");
      if (!s.vertices.count(tok[1])) throw FormatError(lineno, "match references undeclared vertex '" + tok[1] + "'");
      if (!s.edges.count(tok[2])) throw FormatError(lineno, "match references undeclared edge '" + tok[2] + "'");
      doc.matches.emplace_back(tok[1], tok[2]);
    } else {
      if (tok.size() != 3) throw FormatError(lineno, "expected: vmatch <lower> <upper>");
      for (int k : {1, 2})
        if (!s.contains(tok[k])) throw FormatError(lineno, "vmatch references undeclared cell '" + tok[k] + "'");
      doc.vmatches.emplace_back(tok[1], tok[2]);
    }
  }
  return doc;
}

inline SurfaceComplex parse_complex(const std::string& text) { return parse_document(text).complex; }

inline std::string emit_document(const Document& doc) {
  const auto& s = doc.complex;
  std::ostringstream out;
  out << "surface " << s.name << "\n";
  for (const auto& v : s.vertices) out << "vertex " << v << "\n";
  for (const auto& [e, ends] : s.edges) out << "edge " << e << " " << ends.tail << " " << ends.head << "\n";
  for (const auto& [f, w] : s.faces) {
    out << "face " << f << " walk";
    for (const auto& o : w) out << " " << o.str();
    out << "\n";
  }
  for (const auto& [v, e] : doc.matches) out << "match " << v << " " << e << "\n";
  for (const auto& [lo, up] : doc.vmatches) out << "vmatch " << lo << " " << up << "\n";
  return out.str();
}

inline std::string emit_complex(const SurfaceComplex& s) { return emit_document({s, {}, {}}); }

}  // namespace dlf
