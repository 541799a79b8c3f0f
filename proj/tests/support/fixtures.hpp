#pragma once

#include <string>

#include <dlf/dlf.hpp>

namespace dlf::testing {

inline const char* kTetrahedron = R"(surface tetrahedron
vertex v1
vertex v2
vertex v3
vertex v4
edge e12 v1 v2
edge e13 v1 v3
edge e14 v1 v4
edge e23 v2 v3
edge e24 v2 v4
edge e34 v3 v4
face f123 walk +e13 -e23 -e12
face f124 walk +e12 +e24 -e14
face f134 walk +e14 -e34 -e13
face f234 walk +e23 +e34 -e24
)";

inline const char* kTorus = R"(surface torus
vertex v
edge a v v
edge b v v
face f walk +a +b -a -b
)";

inline const char* kDisc2 = R"(surface sphere2
vertex v
edge e v v
face f1 walk +e
face f2 walk -e
)";

inline const char* kProjectivePlane = R"(surface rp2
vertex v
edge a v v
face f walk +a +a
)";

inline const char* kKlein = R"(surface klein
vertex v
edge a v v
edge b v v
face f walk +a +b -a +b
)";

/// Sphere with two vertices, one edge and one face of walk (+e, -e).
inline const char* kDigonSphere = R"(surface digon
vertex u
vertex w
edge e u w
face f walk +e -e
)";

inline SurfaceComplex T1() { return parse_complex(kTetrahedron); }
inline SurfaceComplex Q1() { return parse_complex(kTorus); }
inline SurfaceComplex D2() { return parse_complex(kDisc2); }
inline SurfaceComplex RP2() { return parse_complex(kProjectivePlane); }
inline SurfaceComplex Klein() { return parse_complex(kKlein); }
inline SurfaceComplex Digon() { return parse_complex(kDigonSphere); }

/// The chain field (T1, {(v1,e12), (v2,e23)}).
inline LineField T1_chain() { return {T1(), {{"v1", "e12"}, {"v2", "e23"}}}; }

/// n x m square grid on the torus.
inline SurfaceComplex torus_grid(int n, int m) {
  SurfaceComplex s;
  s.name = "torus" + std::to_string(n) + "x" + std::to_string(m);
  auto v = [&](int i, int j) { return "v" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m); };
  auto h = [&](int i, int j) { return "h" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m); };
  auto u = [&](int i, int j) { return "u" + std::to_string((i + n) % n) + "_" + std::to_string((j + m) % m); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      s.vertices.insert(v(i, j));
      s.edges[h(i, j)] = {v(i, j), v(i + 1, j)};
      s.edges[u(i, j)] = {v(i, j), v(i, j + 1)};
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      s.faces["q" + std::to_string(i) + "_" + std::to_string(j)] =
          canonical_rotation({{h(i, j), true}, {u(i + 1, j), true}, {h(i, j + 1), false}, {u(i, j), false}});
  return s;
}

/// Two n x m square grids glued along their boundary: a quadrangulated sphere.
inline SurfaceComplex pillow(int n, int m) {
  SurfaceComplex s;
  s.name = "pillow" + std::to_string(n) + "x" + std::to_string(m);
  auto on_rim = [&](int i, int j) { return i == 0 || i == n || j == 0 || j == m; };
  auto v = [&](char side, int i, int j) {
    return std::string(1, on_rim(i, j) ? 'v' : side) + std::to_string(i) + "_" + std::to_string(j);
  };
  auto h = [&](char side, int i, int j) {  // (i,j) -> (i+1,j)
    const bool rim = j == 0 || j == m;
    return std::string(rim ? "h" : std::string("h") + side) + std::to_string(i) + "_" + std::to_string(j);
  };
  auto u = [&](char side, int i, int j) {  // (i,j) -> (i,j+1)
    const bool rim = i == 0 || i == n;
    return std::string(rim ? "u" : std::string("u") + side) + std::to_string(i) + "_" + std::to_string(j);
  };
  for (char side : {'a', 'b'}) {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= m; ++j) {
        s.vertices.insert(v(side, i, j));
        if (i < n) s.edges[h(side, i, j)] = {v(side, i, j), v(side, i + 1, j)};
        if (j < m) s.edges[u(side, i, j)] = {v(side, i, j), v(side, i, j + 1)};
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        Walk w{{h(side, i, j), true}, {u(side, i + 1, j), true}, {h(side, i, j + 1), false}, {u(side, i, j), false}};
        if (side == 'b') w = reversed_walk(w);
        s.faces[std::string("q") + side + std::to_string(i) + "_" + std::to_string(j)] = canonical_rotation(w);
      }
  }
  return s;
}

inline const char* kIcosahedronOff = R"(OFF
12 20 30
0 1.618 1
0 1.618 -1
0 -1.618 1
0 -1.618 -1
1 0 1.618
-1 0 1.618
1 0 -1.618
-1 0 -1.618
1.618 1 0
-1.618 1 0
1.618 -1 0
-1.618 -1 0
3 0 1 8
3 0 9 1
3 0 5 9
3 0 4 5
3 0 8 4
3 1 6 8
3 1 7 6
3 1 9 7
3 2 3 11
3 2 10 3
3 2 4 10
3 2 5 4
3 2 11 5
3 3 6 7
3 3 10 6
3 3 7 11
3 4 8 10
3 5 11 9
3 6 10 8
3 7 9 11
)";

}  // namespace dlf::testing
