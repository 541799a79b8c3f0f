#pragma once

// ASCII OFF import. Each polygon becomes a face walk in the listed order;
// edges are identified by unordered vertex pair.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"

namespace dlf {

inline SurfaceComplex import_off(const std::string& text, const std::string& name = "mesh") {
  std::istringstream in(text);
  std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, content)
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(lineno, raw);
  }
  std::size_t at = 0;
  auto next = [&]() -> std::pair<std::size_t, std::istringstream> {
    if (at >= lines.size()) throw FormatError(lineno, "unexpected end of OFF input");
    const auto& [n, l] = lines[at++];
    return {n, std::istringstream(l)};
  };

  auto [hn, header] = next();
  std::string magic;
  header >> magic;
  if (magic != "OFF") throw FormatError(hn, "missing OFF header");
  std::size_t nv = 0, nf = 0, ne = 0;
  if (!(header >> nv)) {
    auto [cn, counts] = next();
    if (!(counts >> nv >> nf >> ne)) throw FormatError(cn, "expected vertex, face and edge counts");
  } else if (!(header >> nf)) {
    throw FormatError(hn, "expected vertex, face and edge counts");
  }

  SurfaceComplex s;
  s.name = name;
  for (std::size_t i = 0; i < nv; ++i) {
    auto [ln, coords] = next();
    double x, y, z;
    if (!(coords >> x >> y >> z)) throw FormatError(ln, "expected three vertex coordinates");
    s.vertices.insert("v" + std::to_string(i));
  }

  std::map<std::pair<std::size_t, std::size_t>, int> uses;
  for (std::size_t f = 0; f < nf; ++f) {
    auto [ln, poly] = next();
    std::size_t k = 0;
    if (!(poly >> k) || k < 3) throw FormatError(ln, "expected a polygon with at least 3 vertices");
    std::vector<std::size_t> idx(k);
    for (auto& i : idx) {
      if (!(poly >> i)) throw FormatError(ln, "expected " + std::to_string(k) + " vertex indices");
      if (i >= nv) throw FormatError(ln, "vertex index " + std::to_string(i) + " out of range");
    }
    Walk w;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t a = idx[j], b = idx[(j + 1) % k];
      if (a == b) throw FormatError(ln, "degenerate polygon side");
      const auto key = std::minmax(a, b);
      if (++uses[key] > 2)
        throw FormatError(ln, "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                  ") used by more than two faces (non-manifold)");
      const CellId e = "e" + std::to_string(key.first) + "_" + std::to_string(key.second);
      s.edges[e] = {"v" + std::to_string(key.first), "v" + std::to_string(key.second)};
      w.push_back({e, a == key.first});
    }
    s.faces["f" + std::to_string(f)] = canonical_rotation(w);
  }
  return s;
}

}  // namespace dlf
