#pragma once

// CW decompositions of closed surfaces, stored as boundary walks of signed
// edge occurrences. Loops, parallel edges, repeated occurrences inside one
// walk and non-orientable gluings are all representable.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dlf {

using CellId = std::string;

enum Dim : int { kVertex = 0, kEdge = 1, kFace = 2 };

struct Occurrence {
  CellId edge;
  bool forward = true;  // +e walks tail -> head

  Occurrence flipped() const { return {edge, !forward}; }
  std::string str() const { return (forward ? "+" : "-") + edge; }
  bool operator==(const Occurrence&) const = default;
};

using Walk = std::vector<Occurrence>;

struct EdgeEnds {
  CellId tail;
  CellId head;

  bool is_loop() const { return tail == head; }
  bool operator==(const EdgeEnds&) const = default;
};

/// Position of one edge occurrence: face id plus index into its walk.
struct OccurrenceRef {
  CellId face;
  std::size_t pos = 0;

  auto operator<=>(const OccurrenceRef&) const = default;
};

struct SurfaceComplex {
  std::string name = "surface";
  std::set<CellId> vertices;
  std::map<CellId, EdgeEnds> edges;
  std::map<CellId, Walk> faces;

  bool operator==(const SurfaceComplex&) const = default;

  std::optional<int> dim(const CellId& id) const {
    if (vertices.count(id)) return kVertex;
    if (edges.count(id)) return kEdge;
    if (faces.count(id)) return kFace;
    return std::nullopt;
  }

  bool contains(const CellId& id) const { return dim(id).has_value(); }

  const Walk& walk(const CellId& face) const {
    auto it = faces.find(face);
    if (it == faces.end()) throw OperationError("unknown face '" + face + "'");
    return it->second;
  }

  const EdgeEnds& ends(const CellId& edge) const {
    auto it = edges.find(edge);
    if (it == edges.end()) throw OperationError("unknown edge '" + edge + "'");
    return it->second;
  }

  const Occurrence& at(const OccurrenceRef& r) const { return walk(r.face)[r.pos]; }

  const CellId& start(const Occurrence& o) const {
    const auto& e = ends(o.edge);
    return o.forward ? e.tail : e.head;
  }

  const CellId& finish(const Occurrence& o) const {
    const auto& e = ends(o.edge);
    return o.forward ? e.head : e.tail;
  }

  /// Vertex at the corner preceding walk position `pos`.
  const CellId& corner_vertex(const CellId& face, std::size_t pos) const {
    return start(walk(face)[pos]);
  }

  /// The sphere made of one vertex and one face with an empty boundary walk.
  bool is_point_sphere() const {
    return vertices.size() == 1 && edges.empty() && faces.size() == 1 &&
           faces.begin()->second.empty();
  }
};

// ---------------------------------------------------------------------------
// Canonical walk rotation

inline bool occurrence_text_less(const Occurrence& a, const Occurrence& b) {
  return a.str() < b.str();
}

/// Rotates a cyclic walk so that it starts at its lexicographically least
/// signed occurrence; ties are broken by comparing the whole rotated sequence.
inline Walk canonical_rotation(const Walk& w) {
  const std::size_t n = w.size();
  if (n < 2) return w;
  std::size_t best = 0;
  auto less_from = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = w[(a + k) % n];
      const auto& y = w[(b + k) % n];
      if (x == y) continue;
      return occurrence_text_less(x, y);
    }
    return false;
  };
  for (std::size_t s = 1; s < n; ++s)
    if (less_from(s, best)) best = s;
  Walk out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(w[(best + k) % n]);
  return out;
}

inline void canonicalize(SurfaceComplex& s) {
  for (auto& [id, w] : s.faces) w = canonical_rotation(w);
}

/// Walk read backwards with every occurrence flipped.
inline Walk reversed_walk(const Walk& w) {
  Walk out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->flipped());
  return out;
}

// ---------------------------------------------------------------------------
// Occurrence table: for each edge, the places where it occurs.

using OccurrenceTable = std::map<CellId, std::vector<OccurrenceRef>>;

inline OccurrenceTable occurrence_table(const SurfaceComplex& s) {
  OccurrenceTable t;
  for (const auto& [id, e] : s.edges) t[id];
  for (const auto& [f, w] : s.faces)
    for (std::size_t i = 0; i < w.size(); ++i) t[w[i].edge].push_back({f, i});
  return t;
}

/// The other occurrence of the same edge. Requires the closed-surface
/// condition (exactly two occurrences).
inline OccurrenceRef twin(const OccurrenceTable& t, const SurfaceComplex& s,
                          const OccurrenceRef& r) {
  const auto& occ = t.at(s.at(r).edge);
  if (occ.size() != 2) throw OperationError("edge '" + s.at(r).edge + "' does not occur exactly twice");
  return occ[0] == r ? occ[1] : occ[0];
}

// ---------------------------------------------------------------------------
// Vertex links
//
// Every occurrence has two ends ("slots"). A corner (face, pos) owns the start
// slot of occurrence pos and the end slot of occurrence pos-1. Slots at the
// same endpoint of the two occurrences of an edge are glued together. Walking
// corner -> glued slot -> next corner traces the link of a vertex.

struct Slot {
  OccurrenceRef occ;
  bool at_end = false;

  auto operator<=>(const Slot&) const = default;
};

struct LinkVisit {
  OccurrenceRef corner;  // (face, pos): corner before occurrence `pos`
  Slot entry;
  Slot exit;
};

namespace detail {

inline OccurrenceRef slot_corner(const SurfaceComplex& s, const Slot& sl) {
  if (!sl.at_end) return sl.occ;
  const auto n = s.walk(sl.occ.face).size();
  return {sl.occ.face, (sl.occ.pos + 1) % n};
}

inline Slot other_slot(const SurfaceComplex& s, const Slot& sl) {
  const auto n = s.walk(sl.occ.face).size();
  if (!sl.at_end) return {{sl.occ.face, (sl.occ.pos + n - 1) % n}, true};
  return {{sl.occ.face, (sl.occ.pos + 1) % n}, false};
}

inline Slot glued_slot(const OccurrenceTable& t, const SurfaceComplex& s, const Slot& sl) {
  const bool at_head = sl.at_end == s.at(sl.occ).forward;
  const OccurrenceRef o2 = twin(t, s, sl.occ);
  return {o2, at_head == s.at(o2).forward};
}

}  // namespace detail

/// Traverses the link cycle containing corner `start_corner`, beginning by
/// leaving through the start slot of that corner.
inline std::vector<LinkVisit> link_cycle(const SurfaceComplex& s, const OccurrenceTable& t,
                                         const OccurrenceRef& start_corner) {
  std::vector<LinkVisit> out;
  const Slot first_exit{start_corner, false};
  Slot entry = detail::other_slot(s, first_exit);
  Slot exit = first_exit;
  OccurrenceRef corner = start_corner;
  while (true) {
    out.push_back({corner, entry, exit});
    entry = detail::glued_slot(t, s, exit);
    corner = detail::slot_corner(s, entry);
    if (corner == start_corner) break;
    exit = detail::other_slot(s, entry);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived structure

inline long euler_characteristic(const SurfaceComplex& s) {
  return static_cast<long>(s.vertices.size()) - static_cast<long>(s.edges.size()) +
         static_cast<long>(s.faces.size());
}

struct Corner {
  CellId vertex;
  CellId face;
  std::size_t pos = 0;

  bool operator==(const Corner&) const = default;
};

inline std::vector<Corner> corners(const SurfaceComplex& s) {
  std::vector<Corner> out;
  for (const auto& [f, w] : s.faces)
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back({s.start(w[i]), f, i});
  return out;
}

struct HasseDiagram {
  std::map<CellId, int> nodes;                                // cell -> dimension
  std::map<std::pair<CellId, CellId>, int> incidences;        // (lower, upper) -> multiplicity

  int multiplicity(const CellId& lower, const CellId& upper) const {
    auto it = incidences.find({lower, upper});
    return it == incidences.end() ? 0 : it->second;
  }

  int total(int lower_dim) const {
    int sum = 0;
    for (const auto& [key, m] : incidences)
      if (nodes.at(key.first) == lower_dim) sum += m;
    return sum;
  }
};

inline HasseDiagram hasse_diagram(const SurfaceComplex& s) {
  HasseDiagram h;
  for (const auto& v : s.vertices) h.nodes[v] = kVertex;
  for (const auto& [e, ends] : s.edges) {
    h.nodes[e] = kEdge;
    ++h.incidences[{ends.tail, e}];
    ++h.incidences[{ends.head, e}];
  }
  for (const auto& [f, w] : s.faces) {
    h.nodes[f] = kFace;
    for (const auto& o : w) ++h.incidences[{o.edge, f}];
  }
  return h;
}

// ---------------------------------------------------------------------------
// Validation

using ValidationReport = std::vector<std::string>;

inline ValidationReport validate(const SurfaceComplex& s) {
  ValidationReport r;

  for (const auto& [e, ends] : s.edges) {
    for (const auto* v : {&ends.tail, &ends.head})
      if (!s.vertices.count(*v)) r.push_back("edge " + e + " references unknown vertex " + *v);
    if (s.vertices.count(e) || s.faces.count(e)) r.push_back("identifier " + e + " used by more than one cell");
  }
  for (const auto& [f, w] : s.faces)
    if (s.vertices.count(f)) r.push_back("identifier " + f + " used by more than one cell");

  if (s.is_point_sphere()) return r;
  if (s.faces.empty()) r.push_back("complex has no faces");

  bool refs_ok = true;
  std::map<CellId, int> count;
  for (const auto& [e, ends] : s.edges) count[e] = 0;
  for (const auto& [f, w] : s.faces) {
    if (w.empty()) r.push_back("face " + f + " has an empty boundary walk");
    for (const auto& o : w) {
      if (!s.edges.count(o.edge)) {
        r.push_back("face " + f + " references unknown edge " + o.edge);
        refs_ok = false;
      } else {
        ++count[o.edge];
      }
    }
  }
  if (!refs_ok || !r.empty()) return r;

  bool counts_ok = true;
  for (const auto& [e, c] : count) {
    if (c == 2) continue;
    counts_ok = false;
    if (c == 1) r.push_back("edge " + e + " occurs once");
    else r.push_back("edge " + e + " occurs " + std::to_string(c) + " times");
  }

  bool chained = true;
  for (const auto& [f, w] : s.faces) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& next = w[(i + 1) % w.size()];
      if (s.finish(w[i]) != s.start(next)) {
        r.push_back("walk of face " + f + " not chained at position " + std::to_string(i) + " (" +
                    w[i].str() + " ends at " + s.finish(w[i]) + ", " + next.str() + " starts at " +
                    s.start(next) + ")");
        chained = false;
      }
    }
  }

  // connectivity over the vertex-edge-face incidence graph
  std::map<CellId, CellId> parent;
  auto find = [&](CellId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](const CellId& a, const CellId& b) { parent[find(a)] = find(b); };
  for (const auto& v : s.vertices) parent[v] = v;
  for (const auto& [e, ends] : s.edges) parent[e] = e;
  for (const auto& [f, w] : s.faces) parent[f] = f;
  for (const auto& [e, ends] : s.edges) {
    unite(e, ends.tail);
    unite(e, ends.head);
  }
  for (const auto& [f, w] : s.faces)
    for (const auto& o : w) unite(f, o.edge);
  std::set<CellId> roots;
  for (const auto& [id, p] : parent) roots.insert(find(id));
  if (roots.size() > 1) r.push_back("complex is disconnected (" + std::to_string(roots.size()) + " components)");

  std::map<CellId, std::size_t> corner_count;
  for (const auto& c : corners(s)) ++corner_count[c.vertex];
  for (const auto& v : s.vertices)
    if (!corner_count.count(v)) r.push_back("vertex " + v + " lies on no boundary walk");

  if (counts_ok && chained) {
    // each vertex must have a single link cycle, otherwise it is a pinch point
    const auto t = occurrence_table(s);
    std::set<OccurrenceRef> seen;
    std::map<CellId, int> cycles;
    for (const auto& [f, w] : s.faces) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen.count({f, i})) continue;
        for (const auto& visit : link_cycle(s, t, {f, i})) seen.insert(visit.corner);
        ++cycles[s.start(w[i])];
      }
    }
    for (const auto& [v, n] : cycles)
      if (n > 1) r.push_back("vertex " + v + " has " + std::to_string(n) + " link cycles (not a surface point)");
  }
  return r;
}

inline void require_valid(const SurfaceComplex& s) {
  const auto r = validate(s);
  if (!r.empty()) throw OperationError("invalid complex: " + r.front());
}

// ---------------------------------------------------------------------------
// Dual decomposition. Dual cells reuse the identifiers of the cells they
// stand for: dual vertex f, dual edge e, dual face v.

inline SurfaceComplex dual(const SurfaceComplex& s) {
  SurfaceComplex d;
  d.name = s.name + "*";
  if (s.is_point_sphere()) {
    d.vertices.insert(s.faces.begin()->first);
    d.faces[*s.vertices.begin()] = {};
    return d;
  }
  const auto t = occurrence_table(s);
  for (const auto& [f, w] : s.faces) d.vertices.insert(f);
  for (const auto& [e, occ] : t) d.edges[e] = {occ.at(0).face, occ.at(1).face};

  std::set<OccurrenceRef> seen;
  for (const auto& v : s.vertices) d.faces[v];
  for (const auto& [f, w] : s.faces) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (seen.count({f, i})) continue;
      const auto cycle = link_cycle(s, t, {f, i});
      Walk dw;
      for (const auto& visit : cycle) {
        seen.insert(visit.corner);
        const auto& e = s.at(visit.exit.occ).edge;
        dw.push_back({e, t.at(e)[0] == visit.exit.occ});
      }
      d.faces[s.start(w[i])] = canonical_rotation(dw);
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Editing primitives shared by simplification and the radial inverse.

/// Deletes an edge whose two occurrences lie on distinct faces, fusing those
/// faces into one face named `merged_id`.
inline SurfaceComplex remove_edge_between_faces(const SurfaceComplex& s, const CellId& edge,
                                                const CellId& merged_id) {
  const auto t = occurrence_table(s);
  const auto& occ = t.at(edge);
  if (occ.size() != 2) throw OperationError("edge '" + edge + "' does not occur exactly twice");
  const auto a = occ[0], b = occ[1];
  if (a.face == b.face) throw OperationError("edge '" + edge + "' does not separate two distinct faces");

  auto rest = [&](const OccurrenceRef& r) {
    const auto& w = s.walk(r.face);
    Walk out;
    for (std::size_t k = 1; k < w.size(); ++k) out.push_back(w[(r.pos + k) % w.size()]);
    return out;
  };
  Walk merged = rest(a);
  Walk tail = rest(b);
  if (s.at(a).forward == s.at(b).forward) tail = reversed_walk(tail);
  merged.insert(merged.end(), tail.begin(), tail.end());

  SurfaceComplex out = s;
  out.edges.erase(edge);
  out.faces.erase(a.face);
  out.faces.erase(b.face);
  out.faces[merged_id] = canonical_rotation(merged);
  return out;
}

}  // namespace dlf
