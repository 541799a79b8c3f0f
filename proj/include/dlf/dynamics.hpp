#pragma once

// L-paths, separatrices, corridors and the Morse-Smale decomposition of a
// discrete line field.
//
// Each vertex is matched to at most one edge, so from any vertex there is
// at most one L-path step: the step graph is a functional graph and L-paths
// out of a vertex form a single chain.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "line_field.hpp"

namespace dlf {

struct LPath {
  std::vector<CellId> vertices;
  std::vector<CellId> edges;

  bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
  bool operator==(const LPath&) const = default;
};

struct LStep {
  CellId edge;
  CellId next;
};

inline std::map<CellId, LStep> l_steps(const LineField& l) {
  std::map<CellId, LStep> out;
  for (const auto& [v, e] : l.pairs) {
    const auto& ends = l.complex.ends(e);
    out[v] = {e, ends.tail == v ? ends.head : ends.tail};
  }
  return out;
}

/// Some closed L-path, if the field has one. A matched loop closes at once.
inline std::optional<LPath> find_closed_l_path(const LineField& l) {
  const auto steps = l_steps(l);
  std::set<CellId> done;
  for (const auto& [start, st0] : steps) {
    if (done.count(start)) continue;
    std::map<CellId, std::size_t> on_chain;
    LPath chain;
    CellId cur = start;
    while (true) {
      if (done.count(cur)) break;
      if (auto it = on_chain.find(cur); it != on_chain.end()) {
        LPath cyc;
        cyc.vertices.assign(chain.vertices.begin() + static_cast<long>(it->second), chain.vertices.end());
        cyc.edges.assign(chain.edges.begin() + static_cast<long>(it->second), chain.edges.end());
        cyc.vertices.push_back(cur);
        return cyc;
      }
      on_chain[cur] = chain.vertices.size();
      chain.vertices.push_back(cur);
      auto st = steps.find(cur);
      if (st == steps.end()) break;
      chain.edges.push_back(st->second.edge);
      cur = st->second.next;
    }
    for (const auto& v : chain.vertices) done.insert(v);
  }
  return std::nullopt;
}

inline bool is_acyclic(const LineField& l) { return !find_closed_l_path(l).has_value(); }

inline void require_acyclic(const LineField& l) {
  if (!is_acyclic(l)) throw OperationError("line field is cyclic");
}

/// The maximal L-path starting at `from`; it ends at an unmatched vertex.
inline LPath follow_chain(const std::map<CellId, LStep>& steps, const CellId& from) {
  LPath p;
  p.vertices.push_back(from);
  for (auto it = steps.find(from); it != steps.end(); it = steps.find(p.vertices.back())) {
    p.edges.push_back(it->second.edge);
    p.vertices.push_back(it->second.next);
  }
  return p;
}

/// All L-paths from `from` to `to` (at most one, since steps are unique).
inline std::vector<LPath> l_paths(const LineField& l, const CellId& from, const CellId& to) {
  require_acyclic(l);
  if (!l.complex.vertices.count(from) || !l.complex.vertices.count(to))
    throw OperationError("L-path endpoints must be vertices");
  const auto full = follow_chain(l_steps(l), from);
  const auto it = std::find(full.vertices.begin(), full.vertices.end(), to);
  if (it == full.vertices.end()) return {};
  const auto k = static_cast<std::size_t>(it - full.vertices.begin());
  LPath p;
  p.vertices.assign(full.vertices.begin(), full.vertices.begin() + static_cast<long>(k) + 1);
  p.edges.assign(full.edges.begin(), full.edges.begin() + static_cast<long>(k));
  return {p};
}

/// Separatrices: for each critical face f and each corner of its walk, the
/// chain from that corner's vertex to a critical vertex, kept only when it
/// uses no edge of f's walk.
inline TopologicalGraph topological_graph(const LineField& l) {
  require_acyclic(l);
  const auto& s = l.complex;
  const auto crit = critical_cells(l);
  const auto steps = l_steps(l);
  TopologicalGraph g;
  for (const auto& [c, idx] : crit) g.nodes.push_back({c, *s.dim(c), idx.value});
  for (const auto& [f, idx] : crit) {
    if (s.dim(f) != kFace) continue;
    const auto& w = s.walk(f);
    std::set<CellId> boundary;
    for (const auto& o : w) boundary.insert(o.edge);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto chain = follow_chain(steps, s.start(w[i]));
      const bool touches = std::any_of(chain.edges.begin(), chain.edges.end(),
                                       [&](const CellId& e) { return boundary.count(e) > 0; });
      if (touches) continue;
      g.edges.push_back({f, chain.vertices.back(), i, chain.vertices, chain.edges});
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Corridors

struct Crossing {
  CellId edge;
  OccurrenceRef exit;   // occurrence left behind in the previous face
  OccurrenceRef entry;  // occurrence entered in the next face
};

/// Chain of faces joined through unmatched edges. Open corridors run from a
/// critical face to a critical face (faces.size() == crossings.size() + 1);
/// closed ones cycle through c = 2 faces only (sizes equal).
struct Corridor {
  std::vector<CellId> faces;
  std::vector<Crossing> crossings;
  bool closed = false;
};

namespace detail {

struct CorridorWalker {
  const LineField& l;
  OccurrenceTable table;
  std::set<CellId> matched;
  std::map<CellId, int> c;

  explicit CorridorWalker(const LineField& field) : l(field), table(occurrence_table(field.complex)) {
    matched = l.matched_edges();
    for (const auto& [f, w] : l.complex.faces) c[f] = unmatched_boundary_count(l, f);
  }

  bool unmatched(const OccurrenceRef& r) const { return !matched.count(l.complex.at(r).edge); }

  // the other unmatched occurrence of a c = 2 face
  OccurrenceRef other_unmatched(const OccurrenceRef& r) const {
    const auto& w = l.complex.walk(r.face);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (k != r.pos && !matched.count(w[k].edge)) return {r.face, k};
    throw OperationError("face " + r.face + " has a single unmatched occurrence");
  }

  Corridor trace(const OccurrenceRef& start) const {
    Corridor cor;
    cor.faces.push_back(start.face);
    OccurrenceRef exit = start;
    while (true) {
      const OccurrenceRef entry = twin(table, l.complex, exit);
      cor.crossings.push_back({l.complex.at(exit).edge, exit, entry});
      if (c.at(entry.face) != 2) {
        cor.faces.push_back(entry.face);
        return cor;
      }
      const OccurrenceRef next = other_unmatched(entry);
      if (next == start) {  // only reachable from a c = 2 start: a closed corridor
        cor.closed = true;
        return cor;
      }
      cor.faces.push_back(entry.face);
      exit = next;
    }
  }
};

}  // namespace detail

inline std::vector<Corridor> corridors_from(const LineField& l, const CellId& f) {
  require_acyclic(l);
  detail::CorridorWalker walker(l);
  if (walker.c.at(f) == 2) throw OperationError("face " + f + " is not critical");
  std::vector<Corridor> out;
  const auto& w = l.complex.walk(f);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (walker.unmatched({f, i})) out.push_back(walker.trace({f, i}));
  return out;
}

struct MsDecomposition {
  TopologicalGraph graph;
  std::vector<Corridor> corridors;         // one per region, both directions merged
  std::vector<Corridor> closed_corridors;  // periodic components
  bool periodic() const { return !closed_corridors.empty(); }
  std::size_t regions() const { return corridors.size(); }
};

inline MsDecomposition ms_decomposition(const LineField& l) {
  MsDecomposition ms;
  ms.graph = topological_graph(l);
  detail::CorridorWalker walker(l);
  std::set<OccurrenceRef> visited;
  for (const auto& [f, w] : l.complex.faces) {
    if (walker.c.at(f) == 2) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const OccurrenceRef start{f, i};
      if (!walker.unmatched(start) || visited.count(start)) continue;
      auto cor = walker.trace(start);
      for (const auto& x : cor.crossings) {
        visited.insert(x.exit);
        visited.insert(x.entry);
      }
      ms.corridors.push_back(std::move(cor));
    }
  }
  for (const auto& [f, w] : l.complex.faces) {
    if (walker.c.at(f) != 2) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const OccurrenceRef start{f, i};
      if (!walker.unmatched(start) || visited.count(start)) continue;
      auto cor = walker.trace(start);
      for (const auto& x : cor.crossings) {
        visited.insert(x.exit);
        visited.insert(x.entry);
      }
      ms.closed_corridors.push_back(std::move(cor));
    }
  }
  return ms;
}

}  // namespace dlf
