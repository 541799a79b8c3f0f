#pragma once

// Combinatorial isomorphism of surface complexes. Each face may be matched
// to its image under any rotation or reflection of its walk; each edge may
// be matched with or against its stored orientation. For connected
// complexes one face flag determines everything, so the search tries every
// image flag of a single seed face and propagates across edges.

#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "complex.hpp"

namespace dlf {

struct Isomorphism {
  std::map<CellId, CellId> cell;        // every cell of the source -> its image
  std::map<CellId, bool> edge_aligned;  // true if tail maps to tail
};

namespace detail {

struct FaceMap {
  CellId image;
  std::size_t shift = 0;
  bool reflect = false;

  // image position of source occurrence i in a walk of length n
  std::size_t image_pos(std::size_t i, std::size_t n) const {
    return reflect ? (shift + n - i) % n : (shift + i) % n;
  }
};

inline std::optional<Isomorphism> propagate(const SurfaceComplex& a, const SurfaceComplex& b,
                                            const OccurrenceTable& ta, const OccurrenceTable& tb,
                                            const CellId& seed, const FaceMap& seed_map) {
  Isomorphism iso;
  std::map<CellId, FaceMap> fmap;
  std::set<CellId> used_faces, used_edges, used_vertices;
  std::deque<CellId> queue;

  auto assign = [&](const CellId& from, const CellId& to, std::set<CellId>& used) {
    auto [it, inserted] = iso.cell.emplace(from, to);
    if (!inserted) return it->second == to;
    return used.insert(to).second;
  };

  auto map_face = [&](const CellId& f, const FaceMap& m) {
    if (auto it = fmap.find(f); it != fmap.end())
      return it->second.image == m.image && it->second.shift == m.shift && it->second.reflect == m.reflect;
    if (a.walk(f).size() != b.walk(m.image).size()) return false;
    if (!assign(f, m.image, used_faces)) return false;
    fmap[f] = m;
    queue.push_back(f);
    return true;
  };

  if (!map_face(seed, seed_map)) return std::nullopt;
  while (!queue.empty()) {
    const CellId f = queue.front();
    queue.pop_front();
    const auto& m = fmap.at(f);
    const auto& wa = a.walk(f);
    const auto& wb = b.walk(m.image);
    const std::size_t n = wa.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& oa = wa[i];
      const std::size_t j = m.image_pos(i, n);
      const auto& ob = wb[j];
      // traversal direction of the image relative to the source
      const bool aligned = m.reflect ? (oa.forward != ob.forward) : (oa.forward == ob.forward);
      if (!assign(oa.edge, ob.edge, used_edges)) return std::nullopt;
      if (auto [it, inserted] = iso.edge_aligned.emplace(oa.edge, aligned); !inserted && it->second != aligned)
        return std::nullopt;

      const auto& ea = a.ends(oa.edge);
      const auto& eb = b.ends(ob.edge);
      if (!assign(ea.tail, aligned ? eb.tail : eb.head, used_vertices)) return std::nullopt;
      if (!assign(ea.head, aligned ? eb.head : eb.tail, used_vertices)) return std::nullopt;

      const OccurrenceRef ra{f, i}, rb{m.image, j};
      const OccurrenceRef ta2 = twin(ta, a, ra), tb2 = twin(tb, b, rb);
      const auto& oa2 = a.at(ta2);
      const auto& ob2 = b.at(tb2);
      // expected traversal sign of the twin image if its face map is unreflected
      const bool expect = aligned ? oa2.forward : !oa2.forward;
      const std::size_t nb = b.walk(tb2.face).size();
      FaceMap next{tb2.face, 0, expect != ob2.forward};
      next.shift = next.reflect ? (tb2.pos + ta2.pos) % nb : (tb2.pos + nb - ta2.pos % nb) % nb;
      if (!map_face(ta2.face, next)) return std::nullopt;
    }
  }
  if (iso.cell.size() != a.vertices.size() + a.edges.size() + a.faces.size()) return std::nullopt;
  return iso;
}

}  // namespace detail

/// Finds an isomorphism from `a` onto `b` that also satisfies `accept`
/// (used to carry matchings along). Both complexes must be valid.
inline std::optional<Isomorphism> find_isomorphism(
    const SurfaceComplex& a, const SurfaceComplex& b,
    const std::function<bool(const Isomorphism&)>& accept = {}) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.faces.size() != b.faces.size())
    return std::nullopt;
  if (a.is_point_sphere()) {
    if (!b.is_point_sphere()) return std::nullopt;
    Isomorphism iso;
    iso.cell[*a.vertices.begin()] = *b.vertices.begin();
    iso.cell[a.faces.begin()->first] = b.faces.begin()->first;
    if (accept && !accept(iso)) return std::nullopt;
    return iso;
  }
  const auto ta = occurrence_table(a);
  const auto tb = occurrence_table(b);
  const auto& [seed, seed_walk] = *a.faces.begin();
  const std::size_t n = seed_walk.size();
  for (const auto& [g, wg] : b.faces) {
    if (wg.size() != n) continue;
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (bool reflect : {false, true}) {
        auto iso = detail::propagate(a, b, ta, tb, seed, {g, shift, reflect});
        if (iso && (!accept || accept(*iso))) return iso;
      }
    }
  }
  return std::nullopt;
}

inline bool isomorphic(const SurfaceComplex& a, const SurfaceComplex& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace dlf
