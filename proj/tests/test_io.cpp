#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace dlf;
using namespace dlf::testing;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const FormatError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Format, RoundTripCorpus) {
  for (const auto& s : small_corpus(100, 10, 11)) {
    const auto back = parse_complex(emit_complex(s));
    EXPECT_EQ(back, s);
    EXPECT_TRUE(isomorphic(back, s));
  }
}

TEST(Format, MatchLinesRoundTrip) {
  const Document d{T1(), {{"v1", "e12"}, {"v2", "e23"}}, {}};
  const auto back = parse_document(emit_document(d));
  EXPECT_EQ(back.complex, d.complex);
  EXPECT_EQ(back.matches, d.matches);
}

TEST(Format, CommentsAndBlankLines) {
  const auto s = parse_complex("# heading\n\nsurface t # trailing\nvertex v\nedge a v v\n\nface f walk +a -a\n");
  EXPECT_EQ(s.name, "t");
  EXPECT_EQ(s.faces.at("f").size(), 2u);
}

TEST(Format, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("surface s\nvertex v\nvertex v\n"), 3u);
  EXPECT_EQ(error_line("surface s\nvertex v\nedge a v w\n"), 3u);
  EXPECT_EQ(error_line("surface s\nvertex v\nedge a v v\nface f walk a\n"), 4u);
  EXPECT_EQ(error_line("surface s\nedge a v v\nvertex v\n"), 2u);
  EXPECT_EQ(error_line("surface s\nvertex v\nedge a v v\nface f walk +a -a\nvertex w\n"), 5u);
  EXPECT_EQ(error_line("surface s\nvertex v\nbogus v\n"), 3u);
  EXPECT_EQ(error_line("surface s\nvertex v\nedge a v v\nface f walk +a -a\nmatch v a\nvmatch v a\n"), 6u);
  EXPECT_EQ(error_line("surface s\nvertex v\nedge a v v\nface f walk +a -a\nmatch w a\n"), 5u);
}

TEST(Off, Icosahedron) {
  const auto s = import_off(kIcosahedronOff, "ico");
  EXPECT_EQ(s.vertices.size(), 12u);
  EXPECT_EQ(s.edges.size(), 30u);
  EXPECT_EQ(s.faces.size(), 20u);
  EXPECT_TRUE(validate(s).empty());
  EXPECT_EQ(euler_characteristic(s), 2);
}

TEST(Off, OpenMeshFailsValidation) {
  const auto s = import_off("OFF\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  EXPECT_FALSE(validate(s).empty());
}

TEST(Off, NonManifoldRejected) {
  const std::string text = "OFF\n4 3 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 1 2\n3 1 0 3\n3 0 1 3\n";
  try {
    import_off(text);
    FAIL() << "expected a format error";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 9u);
  }
}

TEST(Off, CountsOnSeparateLine) {
  const auto s = import_off("OFF # header\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n3 0 2 1\n3 0 1 3\n3 1 2 3\n3 0 3 2\n");
  EXPECT_TRUE(validate(s).empty());
  EXPECT_TRUE(isomorphic(s, T1()));
}

TEST(Json, GraphRoundTrip) {
  const auto l = T1_chain();
  const auto ms = ms_decomposition(l);
  const auto j = nlohmann::json::parse(decomposition_json(l, ms).dump());
  const auto g = graph_from_json(j);
  std::set<CellId> critical_nodes;
  for (const auto& [c, idx] : critical_cells(l)) critical_nodes.insert(c);
  std::set<CellId> graph_nodes;
  for (const auto& n : g.nodes) graph_nodes.insert(n.cell);
  EXPECT_EQ(graph_nodes, critical_nodes);
  ASSERT_EQ(g.edges.size(), ms.graph.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    EXPECT_EQ(g.edges[i].upper, ms.graph.edges[i].upper);
    EXPECT_EQ(g.edges[i].lower, ms.graph.edges[i].lower);
    EXPECT_EQ(g.edges[i].path, ms.graph.edges[i].path);
  }
}

TEST(Dot, ShapesAndLabels) {
  const auto dot = to_dot(topological_graph({D2(), {}}), "d2");
  EXPECT_NE(dot.find("\"v\" [shape=circle, label=\"v (idx=2/2)\"];"), std::string::npos);
  EXPECT_NE(dot.find("\"f1\" [shape=box, label=\"f1 (idx=1/2)\"];"), std::string::npos);
  EXPECT_NE(dot.find("\"f2\" -- \"v\";"), std::string::npos);
}
