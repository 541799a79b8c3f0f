#pragma once

// Homotopy simplification of acyclic line fields and the two cancellations:
// merging two critical faces along a corridor, and cancelling a critical
// vertex against a critical face through their unique separatrix.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "line_field.hpp"

namespace dlf {

/// Where each cell of an original complex ended up. Surviving cells map to
/// themselves; removed cells map to the cell that absorbed them.
struct CellCorrespondence {
  std::map<CellId, CellId> image;

  static CellCorrespondence identity(const SurfaceComplex& s) {
    CellCorrespondence c;
    for (const auto& v : s.vertices) c.image[v] = v;
    for (const auto& [e, ends] : s.edges) c.image[e] = e;
    for (const auto& [f, w] : s.faces) c.image[f] = f;
    return c;
  }

  /// Follows one more editing step, given as a map of the cells it moved.
  void then(const std::map<CellId, CellId>& step) {
    for (auto& [from, to] : image)
      if (auto it = step.find(to); it != step.end()) to = it->second;
  }

  std::multimap<CellId, CellId> preimages() const {
    std::multimap<CellId, CellId> inv;
    for (const auto& [from, to] : image) inv.emplace(to, from);
    return inv;
  }

  const CellId& operator()(const CellId& c) const { return image.at(c); }
};

struct Simplified {
  LineField field;
  CellCorrespondence map;
};

struct CoreResult {
  LineField field;
  CellCorrespondence map;
  std::vector<CellId> degenerate_faces;  // c = 2 faces whose two unmatched occurrences share an edge

  bool degenerate() const { return !degenerate_faces.empty(); }
};

namespace detail {

inline CellId fresh_id(const SurfaceComplex& s, const std::string& base) {
  if (!s.contains(base)) return base;
  for (int k = 1;; ++k) {
    auto id = base + "_" + std::to_string(k);
    if (!s.contains(id)) return id;
  }
}

inline SurfaceComplex contract_edge(const SurfaceComplex& s, const CellId& v, const CellId& e) {
  const auto& ends = s.ends(e);
  const CellId w = ends.tail == v ? ends.head : ends.tail;
  SurfaceComplex out = s;
  out.edges.erase(e);
  out.vertices.erase(v);
  for (auto& [id, en] : out.edges) {
    if (en.tail == v) en.tail = w;
    if (en.head == v) en.head = w;
  }
  for (auto& [f, walk] : out.faces) {
    std::erase_if(walk, [&](const Occurrence& o) { return o.edge == e; });
    walk = canonical_rotation(walk);
  }
  return out;
}

}  // namespace detail

/// Contracts the matched edge e, merging v into the other endpoint.
inline Simplified contract_matched_pair(const LineField& l, const CellId& v, const CellId& e) {
  if (!l.pairs.count({v, e})) throw OperationError("(" + v + "," + e + ") is not a matched pair");
  const auto& ends = l.complex.ends(e);
  if (ends.is_loop()) throw OperationError("matched loop " + e + " cannot be contracted");
  const CellId w = ends.tail == v ? ends.head : ends.tail;

  Simplified r{{detail::contract_edge(l.complex, v, e), l.pairs}, CellCorrespondence::identity(l.complex)};
  r.field.pairs.erase({v, e});
  r.map.then({{v, w}, {e, w}});
  return r;
}

/// Collapses a non-critical face over the lesser of its two unmatched edges,
/// fusing it into the face on the other side. Requires an empty matching.
inline Simplified collapse_noncritical_face(const LineField& l, const CellId& f) {
  if (!l.pairs.empty()) throw OperationError("matched pairs remain; contract them first");
  const auto& w = l.complex.walk(f);
  if (w.size() != 2) throw OperationError("face " + f + " is critical");
  if (w[0].edge == w[1].edge)
    throw OperationError("face " + f + " is degenerate: both unmatched occurrences belong to edge " + w[0].edge);
  const CellId e1 = std::min(w[0].edge, w[1].edge);
  const auto occ = occurrence_table(l.complex).at(e1);
  const CellId g = occ[0].face == f ? occ[1].face : occ[0].face;

  Simplified r{{remove_edge_between_faces(l.complex, e1, g), {}}, CellCorrespondence::identity(l.complex)};
  r.map.then({{f, g}, {e1, g}});
  return r;
}

/// Contracts every matched pair, then collapses non-critical faces until
/// none is collapsible. Degenerate faces are left in place and reported.
inline CoreResult homotopy_core(const LineField& l) {
  require_acyclic(l);
  CoreResult r{l, CellCorrespondence::identity(l.complex), {}};

  // reverse topological order of the step graph: a vertex is contracted
  // only after everything downstream of it
  const auto steps = l_steps(l);
  std::vector<CellId> order;
  std::set<CellId> placed;
  std::function<void(const CellId&)> visit = [&](const CellId& v) {
    if (placed.count(v)) return;
    placed.insert(v);
    if (auto it = steps.find(v); it != steps.end()) visit(it->second.next);
    if (steps.count(v)) order.push_back(v);
  };
  for (const auto& [v, st] : steps) visit(v);

  for (const auto& v : order) {
    const CellId e = steps.at(v).edge;
    auto step = contract_matched_pair(r.field, v, e);
    r.field = std::move(step.field);
    const CellId w = step.map(v);
    r.map.then({{v, w}, {e, w}});
  }

  while (true) {
    bool changed = false;
    r.degenerate_faces.clear();
    for (const auto& [f, w] : r.field.complex.faces) {
      if (w.size() != 2) continue;
      if (w[0].edge == w[1].edge) {
        r.degenerate_faces.push_back(f);
        continue;
      }
      const CellId e1 = std::min(w[0].edge, w[1].edge);
      auto step = collapse_noncritical_face(r.field, f);
      const CellId g = step.map(f);
      r.field = std::move(step.field);
      r.map.then({{f, g}, {e1, g}});
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return r;
}

/// Deletes the crossing edges of the unique corridor from f to g, fusing
/// f, the corridor interior and g into one face that keeps the id of f.
inline Simplified merge_critical_faces(const LineField& l, const CellId& f, const CellId& g) {
  if (f == g) throw OperationError("cannot merge a face with itself");
  const auto crit = critical_cells(l);
  for (const auto* x : {&f, &g})
    if (!crit.count(*x) || l.complex.dim(*x) != kFace) throw OperationError(*x + " is not a critical face");

  const auto all = corridors_from(l, f);
  std::vector<Corridor> hits;
  for (const auto& c : all)
    if (c.faces.back() == g) hits.push_back(c);
  if (hits.empty()) throw OperationError("no corridor joins " + f + " and " + g);
  if (hits.size() > 1)
    throw OperationError(std::to_string(hits.size()) + " corridors join " + f + " and " + g + "; merge needs a unique one");
  const auto& cor = hits.front();

  Simplified r{l, CellCorrespondence::identity(l.complex)};
  for (std::size_t k = 0; k < cor.crossings.size(); ++k) {
    const CellId& e = cor.crossings[k].edge;
    const CellId& next = cor.faces[k + 1];
    r.field.complex = remove_edge_between_faces(r.field.complex, e, f);
    r.map.then({{next, f}, {e, f}});
  }
  return r;
}

/// Cancels critical vertex v against critical face f (c(f) > 2) through
/// their unique separatrix: the path is reversed and f is split by a new
/// diagonal matched to the path's first vertex.
inline Simplified cancel_vertex_face(const LineField& l, const CellId& v, const CellId& f) {
  const auto crit = critical_cells(l);
  if (!crit.count(v) || l.complex.dim(v) != kVertex) throw OperationError(v + " is not a critical vertex");
  if (!crit.count(f) || l.complex.dim(f) != kFace) throw OperationError(f + " is not a critical face");
  if (crit.at(f).value >= 0) throw OperationError("face " + f + " has non-negative index");

  const auto graph = topological_graph(l);
  std::vector<Separatrix> hits;
  for (const auto& s : graph.edges)
    if (s.upper == f && s.lower == v) hits.push_back(s);
  if (hits.empty()) throw OperationError("no separatrix joins " + f + " and " + v);
  if (hits.size() > 1)
    throw OperationError(std::to_string(hits.size()) + " separatrices join " + f + " and " + v + "; cancellation needs a unique one");
  const auto& sep = hits.front();

  const auto& s = l.complex;
  const auto& w = s.walk(f);
  const std::size_t n = w.size();
  const std::size_t p = sep.slot;
  const CellId& u1 = sep.path.front();
  const auto matched = l.matched_edges();

  std::set<std::pair<CellId, CellId>> pairs = l.pairs;
  for (std::size_t i = 0; i + 1 < sep.path.size(); ++i) {
    pairs.erase({sep.path[i], sep.witnesses[i]});
    pairs.insert({sep.path[i + 1], sep.witnesses[i]});
  }
  const CellId d = detail::fresh_id(s, f + "_d");

  // a diagonal from corner p to corner q cuts w into p..q-1 and q..p-1; f0
  // is whichever side holds exactly two unmatched occurrences, tried with
  // f0 after p first, and the diagonal must not close an L-path
  auto unmatched_between = [&](std::size_t a, std::size_t b) {
    int c = 0;
    for (std::size_t k = a; k != b; k = (k + 1) % n) c += !matched.count(w[k].edge);
    return c;
  };
  std::optional<std::pair<std::size_t, bool>> chosen;  // (q, f0 follows p)
  LineField trial{s, pairs};
  trial.pairs.insert({u1, d});
  for (bool after : {true, false}) {
    for (std::size_t k = 1; k < n && !chosen; ++k) {
      const std::size_t q = (p + k) % n;
      if (s.start(w[q]) == u1) continue;
      if ((after ? unmatched_between(p, q) : unmatched_between(q, p)) != 2) continue;
      trial.complex.edges[d] = {u1, s.start(w[q])};
      if (is_acyclic(trial)) chosen = {q, after};
    }
    if (chosen) break;
  }
  if (!chosen) throw OperationError("no admissible diagonal of " + f + " from corner " + std::to_string(p));
  const auto [q, after] = *chosen;

  SurfaceComplex out = s;
  out.edges[d] = {u1, s.start(w[q])};
  const CellId f0 = detail::fresh_id(out, f + "_0");
  out.faces[f0];
  const CellId f1 = detail::fresh_id(out, f + "_1");
  Walk wp, wq;  // p..q-1 closed by d backwards, q..p-1 closed by d forwards
  for (std::size_t k = p; k != q; k = (k + 1) % n) wp.push_back(w[k]);
  wp.push_back({d, false});
  wq.push_back({d, true});
  for (std::size_t k = q; k != p; k = (k + 1) % n) wq.push_back(w[k]);
  out.faces.erase(f);
  out.faces[f0] = canonical_rotation(after ? wp : wq);
  out.faces[f1] = canonical_rotation(after ? wq : wp);

  Simplified r{{out, pairs}, CellCorrespondence::identity(s)};
  r.field.pairs.insert({u1, d});
  r.map.then({{f, f1}});
  return r;
}

}  // namespace dlf
