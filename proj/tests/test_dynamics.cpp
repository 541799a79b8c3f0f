#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dlf;
using namespace dlf::testing;

namespace {

std::vector<std::vector<std::string>> as_sequences(const std::vector<LPath>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) {
    std::vector<std::string> seq{p.vertices.front()};
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      seq.push_back(p.edges[i]);
      seq.push_back(p.vertices[i + 1]);
    }
    out.push_back(seq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Separatrix count between f and v from brute-force paths, one per corner.
std::size_t oracle_separatrices(const LineField& l, const CellId& f, const CellId& v) {
  const auto& w = l.complex.walk(f);
  std::set<CellId> boundary;
  for (const auto& o : w) boundary.insert(o.edge);
  std::size_t n = 0;
  for (const auto& o : w) {
    const auto from = o.forward ? l.complex.edges.at(o.edge).tail : l.complex.edges.at(o.edge).head;
    for (const auto& p : oracle::l_paths(l, from, v)) {
      bool clean = true;
      for (std::size_t k = 1; k < p.size(); k += 2) clean = clean && !boundary.count(p[k]);
      n += clean;
    }
  }
  return n;
}

}  // namespace

TEST(Acyclic, Examples) {
  EXPECT_TRUE(is_acyclic({T1(), {}}));
  EXPECT_FALSE(is_acyclic({Q1(), {{"v", "a"}}}));
  EXPECT_FALSE(is_acyclic({T1(), {{"v1", "e12"}, {"v2", "e23"}, {"v3", "e13"}}}));
  EXPECT_TRUE(is_acyclic(T1_chain()));
}

TEST(Acyclic, LoopWitness) {
  const auto p = find_closed_l_path({Q1(), {{"v", "a"}}});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->vertices, (std::vector<CellId>{"v", "v"}));
  EXPECT_EQ(p->edges, (std::vector<CellId>{"a"}));
  EXPECT_TRUE(p->closed());
}

TEST(Acyclic, TriangleWitness) {
  const auto p = find_closed_l_path({T1(), {{"v1", "e12"}, {"v2", "e23"}, {"v3", "e13"}}});
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(p->closed());
  EXPECT_EQ(p->edges.size(), 3u);
}

TEST(LPaths, Examples) {
  const auto l = T1_chain();
  const auto p = l_paths(l, "v1", "v3");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].vertices, (std::vector<CellId>{"v1", "v2", "v3"}));
  const auto t = l_paths({T1(), {}}, "v1", "v1");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].vertices, (std::vector<CellId>{"v1"}));
  EXPECT_TRUE(l_paths(l, "v3", "v1").empty());
  EXPECT_THROW(l_paths({Q1(), {{"v", "a"}}}, "v", "v"), OperationError);
}

TEST(LPaths, AgreeWithBruteForce) {
  for (const auto& s : small_corpus(15, 6, 5)) {
    for_each_matching(vertex_edge_incidences(s), 3, [&](const auto& pairs) {
      const LineField l{s, pairs};
      ASSERT_EQ(is_acyclic(l), !oracle::has_closed_l_path(l));
      if (!is_acyclic(l)) return;
      for (const auto& a : s.vertices)
        for (const auto& b : s.vertices) {
          auto want = oracle::l_paths(l, a, b);
          std::sort(want.begin(), want.end());
          ASSERT_EQ(as_sequences(l_paths(l, a, b)), want);
        }
    });
  }
}

TEST(Graph, TetrahedronEmpty) {
  const auto g = topological_graph({T1(), {}});
  EXPECT_EQ(g.nodes.size(), 8u);
  EXPECT_EQ(g.edges.size(), 12u);
  for (const auto& [f, w] : T1().faces)
    for (const auto& o : w) EXPECT_EQ(g.count(f, T1().start(o)), 1u);
}

TEST(Graph, TetrahedronChain) {
  const auto g = topological_graph(T1_chain());
  std::set<CellId> nodes;
  for (const auto& n : g.nodes) nodes.insert(n.cell);
  EXPECT_EQ(nodes, (std::set<CellId>{"v3", "v4", "f123", "f134"}));
  EXPECT_EQ(g.edges.size(), 4u);
  EXPECT_EQ(g.count("f123", "v3"), 1u);
  EXPECT_EQ(g.count("f134", "v3"), 2u);
  EXPECT_EQ(g.count("f134", "v4"), 1u);
  bool via_chain = false;
  for (const auto& sep : g.edges)
    via_chain = via_chain || sep.path == std::vector<CellId>{"v1", "v2", "v3"};
  EXPECT_TRUE(via_chain);
}

TEST(Graph, AgreesWithBruteForce) {
  Rng rng(17);
  for (int k = 0; k < 150; ++k) {
    const auto s = random_complex(rng, 8);
    const auto l = random_line_field(rng, s, true);
    const auto g = topological_graph(l);
    const auto crit = critical_cells(l);
    for (const auto& [f, fi] : crit) {
      if (s.dim(f) != kFace) continue;
      for (const auto& [v, vi] : crit)
        if (s.dim(v) == kVertex) {
          EXPECT_EQ(g.count(f, v), oracle_separatrices(l, f, v)) << emit_complex(s);
        }
    }
    for (const auto& sep : g.edges) {
      EXPECT_EQ(s.dim(sep.upper), kFace);
      EXPECT_EQ(s.dim(sep.lower), kVertex);
    }
  }
}

TEST(Corridors, Examples) {
  const auto c = corridors_from(T1_chain(), "f123");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].faces, (std::vector<CellId>{"f123", "f134"}));
  ASSERT_EQ(c[0].crossings.size(), 1u);
  EXPECT_EQ(c[0].crossings[0].edge, "e13");

  const auto t = corridors_from({T1(), {}}, "f123");
  ASSERT_EQ(t.size(), 3u);
  for (const auto& cor : t) EXPECT_EQ(cor.faces.size(), 2u);

  const auto q = corridors_from({Q1(), {}}, "f");
  ASSERT_EQ(q.size(), 4u);
  for (const auto& cor : q) EXPECT_EQ(cor.faces, (std::vector<CellId>{"f", "f"}));

  EXPECT_THROW(corridors_from(T1_chain(), "f124"), OperationError);
}

TEST(Decomposition, Examples) {
  const auto a = ms_decomposition(T1_chain());
  EXPECT_EQ(a.regions(), 2u);
  EXPECT_EQ(a.graph.edges.size(), 4u);
  EXPECT_FALSE(a.periodic());
  const auto b = ms_decomposition({T1(), {}});
  EXPECT_EQ(b.regions(), 6u);
  EXPECT_EQ(b.graph.edges.size(), 12u);
}

TEST(Decomposition, FullyMatchedFieldsAreCyclic) {
  // every vertex has an outgoing step, so some chain must revisit a vertex
  const auto s = torus_grid(2, 2);
  std::size_t full = 0;
  for_each_matching(vertex_edge_incidences(s), 4, [&](const auto& pairs) {
    if (pairs.size() != 4) return;
    ++full;
    EXPECT_TRUE(oracle::has_closed_l_path({s, pairs}));
  });
  EXPECT_GT(full, 0u);
}

TEST(Decomposition, NoAcyclicPeriodicFieldOnSmallTori) {
  for (const auto& s : {torus_grid(2, 2), torus_grid(2, 3)}) {
    std::size_t acyclic = 0;
    for_each_matching(vertex_edge_incidences(s), 5, [&](const auto& pairs) {
      const LineField l{s, pairs};
      if (oracle::has_closed_l_path(l)) return;
      ++acyclic;
      EXPECT_FALSE(ms_decomposition(l).periodic());
    });
    EXPECT_GT(acyclic, 0u);
  }
}

TEST(Decomposition, PeriodicMobiusBand) {
  // the single face of RP2 has c = 2 and crosses itself through a
  const LineField l{RP2(), {}};
  const auto ms = ms_decomposition(l);
  EXPECT_TRUE(ms.periodic());
  ASSERT_EQ(ms.closed_corridors.size(), 1u);
  const auto& cor = ms.closed_corridors[0];
  EXPECT_TRUE(cor.closed);
  EXPECT_EQ(cor.faces, (std::vector<CellId>{"f"}));
  EXPECT_EQ(cor.crossings.size(), 1u);
  EXPECT_TRUE(ms.corridors.empty());
  ASSERT_EQ(ms.graph.nodes.size(), 1u);
  EXPECT_EQ(ms.graph.nodes[0].cell, "v");
}

TEST(Decomposition, PeriodicComponentsFoundBySearch) {
  std::size_t found = 0;
  for (const auto& s : small_corpus(60, 6, 41))
    for_each_matching(vertex_edge_incidences(s), 3, [&](const auto& pairs) {
      const LineField l{s, pairs};
      if (oracle::has_closed_l_path(l)) return;
      const auto ms = ms_decomposition(l);
      for (const auto& cor : ms.closed_corridors) {
        ++found;
        EXPECT_EQ(cor.faces.size(), cor.crossings.size());
        for (const auto& f : cor.faces) EXPECT_EQ(unmatched_boundary_count(l, f), 2);
      }
    });
  EXPECT_GT(found, 0u);
}

TEST(Decomposition, CorridorInvariants) {
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    const auto s = random_complex(rng, 10);
    const auto l = random_line_field(rng, s, true);
    const auto ms = ms_decomposition(l);
    const auto matched = l.matched_edges();
    std::size_t crossings = 0;
    for (const auto* group : {&ms.corridors, &ms.closed_corridors})
      for (const auto& cor : *group) {
        for (const auto& x : cor.crossings) EXPECT_FALSE(matched.count(x.edge));
        const std::size_t first_interior = cor.closed ? 0 : 1;
        const std::size_t end_interior = cor.closed ? cor.faces.size() : cor.faces.size() - 1;
        for (std::size_t i = first_interior; i < end_interior; ++i)
          EXPECT_EQ(unmatched_boundary_count(l, cor.faces[i]), 2);
        if (!cor.closed) {
          EXPECT_NE(unmatched_boundary_count(l, cor.faces.front()), 2);
          EXPECT_NE(unmatched_boundary_count(l, cor.faces.back()), 2);
        }
        crossings += cor.crossings.size();
      }
    // every unmatched edge is crossed exactly once
    EXPECT_EQ(crossings, s.edges.size() - l.pairs.size());
  }
}
