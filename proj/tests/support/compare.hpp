#pragma once

// Isomorphism of fields: a complex isomorphism that carries one matching
// onto the other.

#include <dlf/dlf.hpp>

namespace dlf::testing {

template <class Field>
bool isomorphic_fields(const Field& a, const Field& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  return find_isomorphism(a.complex, b.complex, [&](const Isomorphism& iso) {
           for (const auto& [x, y] : a.pairs)
             if (!b.pairs.count({iso.cell.at(x), iso.cell.at(y)})) return false;
           return true;
         }).has_value();
}

/// Round trip through the radial embedding, accepting either labelling of
/// the primal and dual class.
inline bool radial_round_trip_holds(const VectorField& v) {
  const auto [p, d] = dlf_to_dvf(dvf_to_dlf(v));
  const auto dv = dualize(v);
  return (isomorphic_fields(p, v) && isomorphic_fields(d, dv)) || (isomorphic_fields(p, dv) && isomorphic_fields(d, v));
}

/// Whether every pair of `v` is a single incidence (not a loop at its
/// vertex, not an edge met twice by its face).
inline bool simple_incidences(const VectorField& v) {
  const auto h = hasse_diagram(v.complex);
  for (const auto& [lo, up] : v.pairs)
    if (h.multiplicity(lo, up) != 1) return false;
  return true;
}

}  // namespace dlf::testing
