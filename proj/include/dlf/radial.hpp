#pragma once

// Radial decomposition R(S): one vertex per vertex and per face of S, one
// edge per corner, one quadrilateral per edge. Discrete vector fields embed
// into line fields on R(S) by splitting the quadrilateral of each matched
// edge with a diagonal at the partner cell.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "complex.hpp"
#include "errors.hpp"
#include "line_field.hpp"
#include "vector_field.hpp"

namespace dlf {

struct RadialComplex {
  SurfaceComplex complex;
  std::map<CellId, CellId> vertex_origin;  // radial vertex -> vertex or face of S
  std::map<CellId, CellId> face_origin;    // radial face -> edge of S
};

/// Identifier of the radial edge for the corner before occurrence `pos` of `face`.
inline CellId corner_edge_id(const CellId& face, std::size_t pos) { return face + ":" + std::to_string(pos); }

inline RadialComplex radial_decomposition(const SurfaceComplex& s) {
  RadialComplex r;
  auto& rc = r.complex;
  rc.name = s.name + ".radial";
  for (const auto& v : s.vertices) {
    rc.vertices.insert(v);
    r.vertex_origin[v] = v;
  }
  for (const auto& [f, w] : s.faces) {
    rc.vertices.insert(f);
    r.vertex_origin[f] = f;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const CellId id = corner_edge_id(f, i);
      if (s.contains(id)) throw OperationError("radial edge id '" + id + "' collides with a cell of the complex");
      rc.edges[id] = {s.start(w[i]), f};
    }
  }
  const auto t = occurrence_table(s);
  for (const auto& [e, occ] : t) {
    // tail -> face A -> head -> face B -> tail
    auto corner_at = [&](const OccurrenceRef& o, bool at_head) {
      const bool at_end = at_head == s.at(o).forward;
      const auto n = s.walk(o.face).size();
      return corner_edge_id(o.face, at_end ? (o.pos + 1) % n : o.pos);
    };
    const auto& a = occ.at(0);
    const auto& b = occ.at(1);
    Walk q{{corner_at(a, false), true}, {corner_at(a, true), false}, {corner_at(b, true), true}, {corner_at(b, false), false}};
    rc.faces[e] = canonical_rotation(q);
    r.face_origin[e] = e;
  }
  return r;
}

/// Two-colouring of the vertex graph, or nothing if it is not bipartite.
inline std::optional<std::map<CellId, int>> bipartition(const SurfaceComplex& s) {
  std::map<CellId, std::vector<CellId>> adj;
  for (const auto& [e, ends] : s.edges) {
    if (ends.is_loop()) return std::nullopt;
    adj[ends.tail].push_back(ends.head);
    adj[ends.head].push_back(ends.tail);
  }
  std::map<CellId, int> colour;
  for (const auto& v : s.vertices) {
    if (colour.count(v)) continue;
    colour[v] = 0;
    std::deque<CellId> queue{v};
    while (!queue.empty()) {
      const CellId x = queue.front();
      queue.pop_front();
      for (const auto& y : adj[x]) {
        if (auto it = colour.find(y); it != colour.end()) {
          if (it->second == colour[x]) return std::nullopt;
        } else {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        }
      }
    }
  }
  return colour;
}

inline bool is_radial(const SurfaceComplex& s) {
  if (s.edges.empty()) return false;
  for (const auto& [f, w] : s.faces)
    if (w.size() != 4) return false;
  return bipartition(s).has_value();
}

/// Recovers the complex whose radial decomposition is `r`, taking the
/// vertices coloured `vertex_colour` as its vertices and the others as its
/// faces. Quadrilateral ids become edge ids.
inline SurfaceComplex pisanski_factor(const SurfaceComplex& r, const std::map<CellId, int>& colour,
                                      int vertex_colour) {
  SurfaceComplex s;
  s.name = r.name;
  const auto t = occurrence_table(r);
  // tail/head of each quad edge: its first and second vertex-class corner
  std::map<CellId, std::size_t> tail_pos;
  for (const auto& [q, w] : r.faces) {
    std::size_t a = colour.at(r.start(w[0])) == vertex_colour ? 0 : 1;
    tail_pos[q] = a;
    s.edges[q] = {r.start(w[a]), r.start(w[a + 2])};
  }
  for (const auto& [v, c] : colour)
    if (c == vertex_colour) s.vertices.insert(v);

  std::set<OccurrenceRef> seen;
  for (const auto& [q, w] : r.faces) {
    for (std::size_t i = 0; i < 4; ++i) {
      const CellId& y = r.start(w[i]);
      if (colour.at(y) == vertex_colour || seen.count({q, i})) continue;
      Walk fw;
      for (const auto& visit : link_cycle(r, t, {q, i})) {
        seen.insert(visit.corner);
        const auto k = visit.corner.pos;
        // entering through the side k-1|k means walking from corner k-1 to k+1
        const bool from_prev = visit.entry.at_end;
        const std::size_t from = from_prev ? (k + 3) % 4 : (k + 1) % 4;
        fw.push_back({visit.corner.face, from == tail_pos.at(visit.corner.face)});
      }
      s.faces[y] = canonical_rotation(fw);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

inline CellId diagonal_id(const CellId& quad) { return quad + "~d"; }
inline CellId split_face_id(const CellId& quad) { return quad + "~t"; }

/// Embeds a vector field as a line field on the radial decomposition. The
/// quadrilateral of each matched edge sigma is split by the diagonal at the
/// partner cell w, and w is matched with that diagonal.
inline LineField dvf_to_dlf(const VectorField& v) {
  require_valid(v);
  const auto& s = v.complex;
  LineField l{radial_decomposition(s).complex, {}};
  auto& rc = l.complex;
  for (const auto& [lo, up] : v.pairs) {
    const bool edge_is_upper = s.dim(up) == kEdge;
    const CellId& sigma = edge_is_upper ? up : lo;
    const CellId& w = edge_is_upper ? lo : up;
    const Walk quad = rc.walk(sigma);
    std::size_t k = 0;
    while (rc.start(quad[k]) != w) ++k;
    const CellId d = diagonal_id(sigma);
    const CellId t2 = split_face_id(sigma);
    if (rc.contains(d) || rc.contains(t2)) throw OperationError("split ids for '" + sigma + "' collide");
    rc.edges[d] = {rc.start(quad[k]), rc.start(quad[(k + 2) % 4])};
    rc.faces[sigma] = canonical_rotation({quad[k], quad[(k + 1) % 4], {d, false}});
    rc.faces[t2] = canonical_rotation({quad[(k + 2) % 4], quad[(k + 3) % 4], {d, true}});
    l.pairs.insert({w, d});
  }
  return l;
}

/// Inverse of dvf_to_dlf: the primal field and its dual. The primal takes
/// the colour class holding the least vertex id as its vertices.
inline std::pair<VectorField, VectorField> dlf_to_dvf(const LineField& l) {
  if (!validate(l.complex).empty()) throw NotInImage("underlying complex is invalid");
  if (!validate_line_field(l).empty()) throw NotInImage("matching is invalid");
  const auto& s = l.complex;
  const auto matched = l.matched_edges();
  const auto t = occurrence_table(s);

  SurfaceComplex residual = s;
  std::map<CellId, CellId> quad_of;  // diagonal -> quadrilateral id
  for (const auto& [w, d] : l.pairs) {
    const auto& occ = t.at(d);
    if (occ[0].face == occ[1].face) throw NotInImage("matched edge " + d + " is not a diagonal");
    for (const auto& o : occ) {
      const auto& tri = s.walk(o.face);
      if (tri.size() != 3) throw NotInImage("matched edge " + d + " does not split a quadrilateral");
      for (const auto& x : tri)
        if (x.edge != d && matched.count(x.edge)) throw NotInImage("face " + o.face + " carries two matched edges");
    }
    const CellId keep = std::min(occ[0].face, occ[1].face);
    residual = remove_edge_between_faces(residual, d, keep);
    quad_of[d] = keep;
  }
  if (!is_radial(residual)) throw NotInImage("unmatched edges do not form a radial decomposition");
  const auto colour = *bipartition(residual);
  const int primal_colour = colour.at(*residual.vertices.begin());

  VectorField primal{pisanski_factor(residual, colour, primal_colour), {}};
  VectorField dual_field{pisanski_factor(residual, colour, 1 - primal_colour), {}};
  for (const auto& [w, d] : l.pairs) {
    const CellId& q = quad_of.at(d);
    if (colour.at(w) == primal_colour) {
      primal.pairs.insert({w, q});
      dual_field.pairs.insert({q, w});
    } else {
      primal.pairs.insert({q, w});
      dual_field.pairs.insert({w, q});
    }
  }
  return {primal, dual_field};
}

}  // namespace dlf
