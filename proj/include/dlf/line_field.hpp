#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "complex.hpp"

namespace dlf {

/// Twice an index, so half-integer face indices stay exact.
struct DoubledIndex {
  int value = 0;

  auto operator<=>(const DoubledIndex&) const = default;
  DoubledIndex operator+(DoubledIndex o) const { return {value + o.value}; }
  DoubledIndex& operator+=(DoubledIndex o) {
    value += o.value;
    return *this;
  }
  std::string fraction() const { return std::to_string(value) + "/2"; }
};

/// A surface complex plus a matching between vertices and edges.
struct LineField {
  SurfaceComplex complex;
  std::set<std::pair<CellId, CellId>> pairs;  // (vertex, edge)

  bool operator==(const LineField&) const = default;

  /// vertex -> matched edge; assumes the matching is valid
  std::map<CellId, CellId> vertex_partner() const {
    std::map<CellId, CellId> m;
    for (const auto& [v, e] : pairs) m[v] = e;
    return m;
  }

  std::set<CellId> matched_edges() const {
    std::set<CellId> s;
    for (const auto& [v, e] : pairs) s.insert(e);
    return s;
  }
};

inline ValidationReport validate_line_field(const LineField& l) {
  ValidationReport r;
  std::map<CellId, int> vcount, ecount;
  for (const auto& [v, e] : l.pairs) {
    if (!l.complex.vertices.count(v)) {
      r.push_back("pair (" + v + "," + e + "): unknown vertex");
      continue;
    }
    if (!l.complex.edges.count(e)) {
      r.push_back("pair (" + v + "," + e + "): unknown edge");
      continue;
    }
    const auto& ends = l.complex.ends(e);
    if (ends.tail != v && ends.head != v) r.push_back("pair (" + v + "," + e + "): non-incident pair");
    ++vcount[v];
    ++ecount[e];
  }
  for (const auto& [v, n] : vcount)
    if (n > 1) r.push_back("vertex " + v + " matched twice");
  for (const auto& [e, n] : ecount)
    if (n > 1) r.push_back("edge " + e + " matched twice");
  return r;
}

inline void require_valid(const LineField& l) {
  require_valid(l.complex);
  const auto r = validate_line_field(l);
  if (!r.empty()) throw OperationError("invalid line field: " + r.front());
}

/// c(f): unmatched edge occurrences on the walk of f, with multiplicity.
inline int unmatched_boundary_count(const LineField& l, const CellId& face) {
  const auto matched = l.matched_edges();
  int c = 0;
  for (const auto& o : l.complex.walk(face))
    if (!matched.count(o.edge)) ++c;
  return c;
}

inline DoubledIndex face_index(const LineField& l, const CellId& face) {
  return {2 - unmatched_boundary_count(l, face)};
}

/// Unmatched vertices (doubled index 2) and faces with c(f) != 2 (doubled
/// index 2 - c(f)). Edges are never critical.
inline std::map<CellId, DoubledIndex> critical_cells(const LineField& l) {
  std::map<CellId, DoubledIndex> out;
  const auto partner = l.vertex_partner();
  for (const auto& v : l.complex.vertices)
    if (!partner.count(v)) out[v] = {2};
  for (const auto& [f, w] : l.complex.faces) {
    const auto idx = face_index(l, f);
    if (idx.value != 0) out[f] = idx;
  }
  return out;
}

inline DoubledIndex euler_sum(const LineField& l) {
  DoubledIndex sum;
  for (const auto& [cell, idx] : critical_cells(l)) sum += idx;
  return sum;
}

}  // namespace dlf
