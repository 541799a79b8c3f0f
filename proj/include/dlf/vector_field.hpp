#pragma once

// Forman discrete vector fields on a surface complex: matchings of Hasse
// diagram incidences, X-paths, acyclicity, dualization, the topological
// graph and cancellation along a unique path.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace dlf {

struct VectorField {
  SurfaceComplex complex;
  std::set<std::pair<CellId, CellId>> pairs;  // (lower, upper), dim(upper) = dim(lower) + 1

  bool operator==(const VectorField&) const = default;
};

struct XPath {
  int dim = 0;
  std::vector<CellId> cells;
  std::vector<CellId> witnesses;  // (dim+1)-cells, one per step
  std::size_t start_slot = 0;     // boundary occurrence of the source cell
};

inline ValidationReport validate_vector_field(const VectorField& v) {
  ValidationReport r;
  const auto& s = v.complex;
  const auto h = hasse_diagram(s);
  std::map<CellId, int> uses;
  for (const auto& [lo, up] : v.pairs) {
    const auto dl = s.dim(lo), du = s.dim(up);
    const std::string tag = "pair (" + lo + "," + up + ")";
    if (!dl || !du) {
      r.push_back(tag + ": unknown cell");
      continue;
    }
    if (*du != *dl + 1) {
      r.push_back(tag + ": dimensions differ by " + std::to_string(*du - *dl) + ", expected 1");
    } else if (h.multiplicity(lo, up) == 0) {
      r.push_back(tag + ": cells are not incident");
    }
    ++uses[lo];
    ++uses[up];
  }
  for (const auto& [c, n] : uses)
    if (n > 1) r.push_back("cell " + c + " in " + std::to_string(n) + " pairs");
  return r;
}

inline void require_valid(const VectorField& v) {
  require_valid(v.complex);
  const auto r = validate_vector_field(v);
  if (!r.empty()) throw OperationError("invalid vector field: " + r.front());
}

/// Unmatched cells with index (-1)^dim.
inline std::map<CellId, int> critical_cells_dvf(const VectorField& v) {
  std::set<CellId> matched;
  for (const auto& [lo, up] : v.pairs) {
    matched.insert(lo);
    matched.insert(up);
  }
  std::map<CellId, int> out;
  const auto& s = v.complex;
  for (const auto& c : s.vertices)
    if (!matched.count(c)) out[c] = 1;
  for (const auto& [c, e] : s.edges)
    if (!matched.count(c)) out[c] = -1;
  for (const auto& [c, w] : s.faces)
    if (!matched.count(c)) out[c] = 1;
  return out;
}

inline long euler_sum_dvf(const VectorField& v) {
  long sum = 0;
  for (const auto& [c, idx] : critical_cells_dvf(v)) sum += idx;
  return sum;
}

// ---------------------------------------------------------------------------
// Step graphs

struct XStep {
  CellId next;
  CellId witness;
};

/// For each p-cell matched upward, the cells reachable in one X-path step.
/// One entry per incidence occurrence, excluding the matched cell itself.
inline std::map<CellId, std::vector<XStep>> x_steps(const VectorField& v, int p) {
  std::map<CellId, std::vector<XStep>> out;
  const auto& s = v.complex;
  for (const auto& [lo, up] : v.pairs) {
    if (s.dim(lo) != p) continue;
    auto& steps = out[lo];
    if (p == kVertex) {
      const auto& e = s.ends(up);
      for (const auto* end : {&e.tail, &e.head})
        if (*end != lo) steps.push_back({*end, up});
    } else {
      for (const auto& o : s.walk(up))
        if (o.edge != lo) steps.push_back({o.edge, up});
    }
  }
  return out;
}

/// The p-cells on the boundary of a (p+1)-cell, one per incidence occurrence.
inline std::vector<CellId> boundary_slots(const SurfaceComplex& s, const CellId& cell) {
  const auto d = s.dim(cell);
  if (d == kEdge) return {s.ends(cell).tail, s.ends(cell).head};
  if (d == kFace) {
    std::vector<CellId> out;
    for (const auto& o : s.walk(cell)) out.push_back(o.edge);
    return out;
  }
  return {};
}

namespace detail {

inline std::optional<std::vector<CellId>> find_cycle(const std::map<CellId, std::vector<XStep>>& steps) {
  std::map<CellId, int> color;  // 0 new, 1 on stack, 2 done
  std::vector<CellId> stack;
  std::optional<std::vector<CellId>> found;
  std::function<bool(const CellId&)> dfs = [&](const CellId& c) {
    color[c] = 1;
    stack.push_back(c);
    if (auto it = steps.find(c); it != steps.end()) {
      for (const auto& st : it->second) {
        const int col = color[st.next];
        if (col == 1) {
          auto begin = std::find(stack.begin(), stack.end(), st.next);
          found = std::vector<CellId>(begin, stack.end());
          found->push_back(st.next);
          return true;
        }
        if (col == 0 && dfs(st.next)) return true;
      }
    }
    stack.pop_back();
    color[c] = 2;
    return false;
  };
  for (const auto& [c, st] : steps)
    if (color[c] == 0 && dfs(c)) return found;
  return std::nullopt;
}

}  // namespace detail

/// A closed X-path (first cell repeated at the end), if any exists.
inline std::optional<std::vector<CellId>> find_closed_x_path(const VectorField& v) {
  for (int p : {kVertex, kEdge})
    if (auto c = detail::find_cycle(x_steps(v, p))) return c;
  return std::nullopt;
}

inline bool is_acyclic_dvf(const VectorField& v) { return !find_closed_x_path(v).has_value(); }

namespace detail {

inline int check_path_query(const VectorField& v, const CellId& from, const CellId& to) {
  const auto df = v.complex.dim(from), dt = v.complex.dim(to);
  if (!df || !dt) throw OperationError("unknown cell in path query");
  if (*df != *dt + 1 || *dt > kEdge)
    throw OperationError("dimension mismatch: '" + from + "' must have dimension one above '" + to + "'");
  if (!is_acyclic_dvf(v)) throw OperationError("vector field is cyclic");
  return *dt;
}

}  // namespace detail

/// Calls `visit` for each X-path from a boundary occurrence of `from` to
/// `to`, in slot order then depth-first step order. Stops when visit
/// returns false.
inline void for_each_x_path(const VectorField& v, const CellId& from, const CellId& to,
                            const std::function<bool(const XPath&)>& visit) {
  const int p = detail::check_path_query(v, from, to);
  const auto steps = x_steps(v, p);
  const auto slots = boundary_slots(v.complex, from);
  XPath cur;
  cur.dim = p;
  bool stop = false;
  std::function<void(const CellId&)> dfs = [&](const CellId& c) {
    if (stop) return;
    cur.cells.push_back(c);
    if (c == to) {
      if (!visit(cur)) stop = true;
    } else if (auto it = steps.find(c); it != steps.end()) {
      for (const auto& st : it->second) {
        cur.witnesses.push_back(st.witness);
        dfs(st.next);
        cur.witnesses.pop_back();
        if (stop) break;
      }
    }
    cur.cells.pop_back();
  };
  for (std::size_t k = 0; k < slots.size() && !stop; ++k) {
    cur.start_slot = k;
    dfs(slots[k]);
  }
}

inline std::vector<XPath> x_paths(const VectorField& v, const CellId& from, const CellId& to,
                                  std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<XPath> out;
  for_each_x_path(v, from, to, [&](const XPath& p) {
    out.push_back(p);
    return out.size() < limit;
  });
  return out;
}

/// Number of X-paths, memoized over the step DAG.
inline std::size_t count_x_paths(const VectorField& v, const CellId& from, const CellId& to) {
  const int p = detail::check_path_query(v, from, to);
  const auto steps = x_steps(v, p);
  std::map<CellId, std::size_t> memo;
  std::function<std::size_t(const CellId&)> count = [&](const CellId& c) -> std::size_t {
    if (c == to) return 1;
    if (auto m = memo.find(c); m != memo.end()) return m->second;
    std::size_t n = 0;
    if (auto it = steps.find(c); it != steps.end())
      for (const auto& st : it->second) n += count(st.next);
    return memo[c] = n;
  };
  std::size_t total = 0;
  for (const auto& c : boundary_slots(v.complex, from)) total += count(c);
  return total;
}

/// Field on the dual complex: each pair {lower, upper} becomes {upper*, lower*}.
inline VectorField dualize(const VectorField& v) {
  VectorField d{dual(v.complex), {}};
  for (const auto& [lo, up] : v.pairs) d.pairs.insert({up, lo});
  return d;
}

inline TopologicalGraph topological_graph_dvf(const VectorField& v) {
  if (!is_acyclic_dvf(v)) throw OperationError("vector field is cyclic");
  const auto& s = v.complex;
  const auto crit = critical_cells_dvf(v);
  TopologicalGraph g;
  for (const auto& [c, idx] : crit) g.nodes.push_back({c, *s.dim(c), 2 * idx});

  for (int p : {kEdge, kVertex}) {
    const auto steps = x_steps(v, p);
    for (const auto& [upper, idx] : crit) {
      if (s.dim(upper) != p + 1) continue;
      const auto slots = boundary_slots(s, upper);
      for (std::size_t k = 0; k < slots.size(); ++k) {
        Separatrix cur{upper, {}, k, {}, {}};
        std::function<void(const CellId&)> dfs = [&](const CellId& c) {
          cur.path.push_back(c);
          if (auto it = steps.find(c); it != steps.end()) {
            for (const auto& st : it->second) {
              cur.witnesses.push_back(st.witness);
              dfs(st.next);
              cur.witnesses.pop_back();
            }
          } else if (crit.count(c)) {
            cur.lower = c;
            g.edges.push_back(cur);
          }
          cur.path.pop_back();
        };
        dfs(slots[k]);
      }
    }
  }
  return g;
}

/// Reverses the unique X-path from critical `upper` to critical `lower` and
/// pairs its first cell with `upper`.
inline VectorField cancel_dvf(const VectorField& v, const CellId& upper, const CellId& lower) {
  const auto crit = critical_cells_dvf(v);
  if (!crit.count(upper) || !crit.count(lower)) throw OperationError("both cells must be critical");
  const auto paths = x_paths(v, upper, lower, 2);
  if (paths.empty()) throw OperationError("no X-path from " + upper + " to " + lower);
  if (paths.size() > 1) throw OperationError("X-path from " + upper + " to " + lower + " is not unique");
  const auto& path = paths.front();
  VectorField out = v;
  for (std::size_t i = 0; i + 1 < path.cells.size(); ++i) {
    out.pairs.erase({path.cells[i], path.witnesses[i]});
    out.pairs.insert({path.cells[i + 1], path.witnesses[i]});
  }
  out.pairs.insert({path.cells.front(), upper});
  return out;
}

}  // namespace dlf
