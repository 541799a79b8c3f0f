#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <dlf/dlf.hpp>

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kOpError = 2;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kInvalid, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kOpError, "cannot write '" + path + "'"};
  out << text;
}

dlf::Document load(const std::string& path) {
  try {
    return dlf::parse_document(read_file(path));
  } catch (const dlf::FormatError& e) {
    throw Failure{kInvalid, path + ": " + e.what()};
  }
}

dlf::LineField line_field_of(const dlf::Document& d) {
  dlf::LineField l{d.complex, {}};
  for (const auto& p : d.matches) l.pairs.insert(p);
  return l;
}

dlf::VectorField vector_field_of(const dlf::Document& d) {
  dlf::VectorField v{d.complex, {}};
  for (const auto& p : d.vmatches) v.pairs.insert(p);
  return v;
}

dlf::Document document_of(const dlf::LineField& l) {
  return {l.complex, {l.pairs.begin(), l.pairs.end()}, {}};
}

dlf::Document document_of(const dlf::VectorField& v) {
  return {v.complex, {}, {v.pairs.begin(), v.pairs.end()}};
}

/// Every problem in the document, complex first; duplicate pair lines count too.
dlf::ValidationReport check(const dlf::Document& d) {
  auto report = dlf::validate(d.complex);
  if (!report.empty()) return report;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& p : d.matches)
    if (!seen.insert(p).second) report.push_back("duplicate match " + p.first + " " + p.second);
  for (const auto& p : d.vmatches)
    if (!seen.insert(p).second) report.push_back("duplicate vmatch " + p.first + " " + p.second);
  const auto more = d.vmatches.empty() ? dlf::validate_line_field(line_field_of(d))
                                       : dlf::validate_vector_field(vector_field_of(d));
  report.insert(report.end(), more.begin(), more.end());
  return report;
}

dlf::Document load_valid(const std::string& path) {
  auto d = load(path);
  const auto report = check(d);
  if (!report.empty()) {
    std::string msg;
    for (const auto& r : report) msg += (msg.empty() ? "" : "\n") + path + ": " + r;
    throw Failure{kInvalid, msg};
  }
  return d;
}

std::string l_path_text(const dlf::LPath& p) {
  std::string out = p.vertices.front();
  for (std::size_t i = 0; i < p.edges.size(); ++i) out += " -" + p.edges[i] + "-> " + p.vertices[i + 1];
  return out;
}

std::string x_path_text(const dlf::XPath& p) {
  std::string out = p.cells.front();
  for (std::size_t i = 0; i < p.witnesses.size(); ++i) out += " -" + p.witnesses[i] + "-> " + p.cells[i + 1];
  return out;
}

dlf::ordered_json dvf_graph_json(const dlf::VectorField& v, const dlf::TopologicalGraph& g) {
  dlf::ordered_json j;
  j["complex"] = dlf::complex_json(v.complex);
  dlf::ordered_json matching = dlf::ordered_json::array();
  for (const auto& [lo, up] : v.pairs) matching.push_back({{"lower", lo}, {"upper", up}});
  j["matching"] = matching;
  j["critical"] = dlf::critical_json(g);
  j["separatrices"] = dlf::separatrices_json(g);
  return j;
}

std::string with_map(const std::string& doc, const dlf::CellCorrespondence& m, const std::string& map_path) {
  const auto j = dlf::correspondence_json(m);
  if (!map_path.empty()) {
    write_output(map_path, j.dump(2) + "\n");
    return doc;
  }
  return doc + "# map " + j.dump() + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete line fields and vector fields on surface complexes"};
  app.require_subcommand(1);

  std::string input, output, map_path, dual_out, format = "dot", from, to, name;
  std::vector<std::string> faces, cells;
  std::string vertex, face;
  bool count_only = false;
  std::size_t limit = 100;

  auto* validate = app.add_subcommand("validate", "check a complex and its matching");
  auto* euler = app.add_subcommand("euler", "compare chi with the index sum");
  auto* critical = app.add_subcommand("critical", "list critical cells as JSON");
  auto* acyclic = app.add_subcommand("check-acyclic", "report a closed path if one exists");
  auto* paths = app.add_subcommand("paths", "enumerate L-paths or X-paths");
  auto* graph = app.add_subcommand("ms-graph", "emit the topological graph");
  auto* simplify = app.add_subcommand("simplify", "reduce to the homotopy core");
  auto* cancel = app.add_subcommand("cancel", "cancel a pair of critical cells");
  auto* from_dvf = app.add_subcommand("from-dvf", "vector field to line field on the radial complex");
  auto* to_dvf = app.add_subcommand("to-dvf", "line field on a radial complex to vector field");
  auto* import = app.add_subcommand("import-off", "convert an OFF mesh to the native format");

  for (auto* sub : {validate, euler, critical, acyclic, paths, graph, simplify, cancel, from_dvf, to_dvf, import})
    sub->add_option("input", input, "input file")->required();
  for (auto* sub : {simplify, cancel, from_dvf, to_dvf, import}) sub->add_option("-o,--output", output, "output file");

  paths->add_option("--from", from)->required();
  paths->add_option("--to", to)->required();
  paths->add_flag("--count", count_only, "print only the number of paths");
  paths->add_option("--limit", limit, "maximum number of paths listed");
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  simplify->add_option("--map", map_path, "write the cell correspondence here");
  cancel->add_option("--map", map_path, "write the cell correspondence here");
  auto* opt_faces = cancel->add_option("--faces", faces, "two critical faces")->expected(2);
  auto* opt_vertex = cancel->add_option("--vertex", vertex);
  auto* opt_face = cancel->add_option("--face", face);
  auto* opt_cells = cancel->add_option("--cells", cells, "upper and lower critical cells")->expected(2);
  opt_vertex->needs(opt_face);
  opt_face->needs(opt_vertex);
  opt_faces->excludes(opt_vertex)->excludes(opt_cells);
  opt_cells->excludes(opt_vertex);
  to_dvf->add_option("--dual-out", dual_out, "also write the dual vector field");
  import->add_option("--name", name, "surface name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kOpError;
  }

  try {
    if (*import) {
      dlf::SurfaceComplex s;
      try {
        s = dlf::import_off(read_file(input), name.empty() ? "mesh" : name);
      } catch (const dlf::FormatError& e) {
        throw Failure{kInvalid, input + ": " + e.what()};
      }
      const auto report = dlf::validate(s);
      if (!report.empty()) {
        std::string msg;
        for (const auto& r : report) msg += (msg.empty() ? "" : "\n") + input + ": " + r;
        throw Failure{kInvalid, msg};
      }
      write_output(output, dlf::emit_complex(s));
      return kOk;
    }

    if (*validate) {
      const auto d = load(input);
      const auto report = check(d);
      for (const auto& r : report) std::cout << r << "\n";
      if (!report.empty()) return kInvalid;
      std::cout << "valid: V=" << d.complex.vertices.size() << " E=" << d.complex.edges.size()
                << " F=" << d.complex.faces.size() << " chi=" << dlf::euler_characteristic(d.complex) << "\n";
      return kOk;
    }

    const auto d = load_valid(input);
    const bool dvf = !d.vmatches.empty();

    if (*euler) {
      const long chi = dlf::euler_characteristic(d.complex);
      std::string sum;
      bool ok = false;
      if (dvf) {
        const long s = dlf::euler_sum_dvf(vector_field_of(d));
        sum = std::to_string(s);
        ok = s == chi;
      } else {
        const auto s = dlf::euler_sum(line_field_of(d));
        sum = s.value % 2 == 0 ? std::to_string(s.value / 2) : s.fraction();
        ok = s.value == 2 * chi;
      }
      std::cout << "chi=" << chi << " index_sum=" << sum << (ok ? " OK" : " MISMATCH") << "\n";
      return ok ? kOk : kOpError;
    }

    if (*critical) {
      dlf::ordered_json j = dlf::ordered_json::array();
      if (dvf) {
        const auto v = vector_field_of(d);
        for (const auto& [c, idx] : dlf::critical_cells_dvf(v))
          j.push_back({{"cell", c}, {"dim", *v.complex.dim(c)}, {"index", idx}});
      } else {
        j = dlf::critical_json(line_field_of(d));
      }
      std::cout << j.dump(2) << "\n";
      return kOk;
    }

    if (*acyclic) {
      if (dvf) {
        if (auto c = dlf::find_closed_x_path(vector_field_of(d))) {
          std::string text;
          for (const auto& x : *c) text += (text.empty() ? "" : " -> ") + x;
          std::cout << text << "\n";
          return kOpError;
        }
      } else if (auto p = dlf::find_closed_l_path(line_field_of(d))) {
        std::cout << l_path_text(*p) << "\n";
        return kOpError;
      }
      std::cout << "acyclic\n";
      return kOk;
    }

    if (*paths) {
      if (dvf) {
        const auto v = vector_field_of(d);
        if (count_only) {
          std::cout << dlf::count_x_paths(v, from, to) << "\n";
          return kOk;
        }
        for (const auto& p : dlf::x_paths(v, from, to, limit))
          std::cout << "slot " << p.start_slot << ": " << x_path_text(p) << "\n";
        return kOk;
      }
      const auto found = dlf::l_paths(line_field_of(d), from, to);
      if (count_only) {
        std::cout << found.size() << "\n";
        return kOk;
      }
      for (std::size_t i = 0; i < found.size() && i < limit; ++i) std::cout << l_path_text(found[i]) << "\n";
      return kOk;
    }

    if (*graph) {
      if (dvf) {
        const auto v = vector_field_of(d);
        const auto g = dlf::topological_graph_dvf(v);
        std::cout << (format == "dot" ? dlf::to_dot(g, d.complex.name) : dvf_graph_json(v, g).dump(2) + "\n");
        return kOk;
      }
      const auto l = line_field_of(d);
      const auto ms = dlf::ms_decomposition(l);
      std::cout << (format == "dot" ? dlf::to_dot(ms.graph, d.complex.name)
                                    : dlf::decomposition_json(l, ms).dump(2) + "\n");
      return kOk;
    }

    if (*simplify) {
      if (dvf) throw Failure{kOpError, "simplify expects a line field"};
      const auto core = dlf::homotopy_core(line_field_of(d));
      write_output(output, with_map(dlf::emit_document(document_of(core.field)), core.map, map_path));
      if (core.degenerate()) {
        std::string list;
        for (const auto& f : core.degenerate_faces) list += " " + f;
        std::cerr << "degenerate non-critical face(s) left uncollapsed:" << list << "\n";
        return kOpError;
      }
      return kOk;
    }

    if (*cancel) {
      if (!cells.empty()) {
        if (!dvf) throw Failure{kOpError, "--cells applies to vector fields"};
        write_output(output, dlf::emit_document(document_of(dlf::cancel_dvf(vector_field_of(d), cells[0], cells[1]))));
        return kOk;
      }
      if (dvf) throw Failure{kOpError, "vector fields are cancelled with --cells upper lower"};
      dlf::Simplified r;
      if (!faces.empty())
        r = dlf::merge_critical_faces(line_field_of(d), faces[0], faces[1]);
      else if (!vertex.empty())
        r = dlf::cancel_vertex_face(line_field_of(d), vertex, face);
      else
        throw Failure{kOpError, "cancel needs --faces, --vertex/--face or --cells"};
      write_output(output, with_map(dlf::emit_document(document_of(r.field)), r.map, map_path));
      return kOk;
    }

    if (*from_dvf) {
      write_output(output, dlf::emit_document(document_of(dlf::dvf_to_dlf(vector_field_of(d)))));
      return kOk;
    }

    if (*to_dvf) {
      if (dvf) throw Failure{kOpError, "to-dvf expects a line field"};
      const auto [primal, dualv] = dlf::dlf_to_dvf(line_field_of(d));
      write_output(output, dlf::emit_document(document_of(primal)));
      if (!dual_out.empty()) write_output(dual_out, dlf::emit_document(document_of(dualv)));
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.code;
  } catch (const dlf::FormatError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const dlf::OperationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOpError;
  }
  return kOpError;
}
