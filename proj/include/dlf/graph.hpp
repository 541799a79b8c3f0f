#pragma once

#include <cstddef>
#include <vector>

#include "complex.hpp"

namespace dlf {

struct GraphNode {
  CellId cell;
  int dim = 0;
  int doubled_index = 0;
};

/// One separatrix. `slot` is the boundary occurrence of `upper` the path
/// starts from; `path` runs from that boundary cell down to `lower`, and
/// `witnesses[i]` is the cell used to step from path[i] to path[i+1].
struct Separatrix {
  CellId upper;
  CellId lower;
  std::size_t slot = 0;
  std::vector<CellId> path;
  std::vector<CellId> witnesses;
};

/// Multigraph on critical cells whose edges are separatrices.
struct TopologicalGraph {
  std::vector<GraphNode> nodes;
  std::vector<Separatrix> edges;

  std::size_t count(const CellId& upper, const CellId& lower) const {
    std::size_t n = 0;
    for (const auto& s : edges)
      if (s.upper == upper && s.lower == lower) ++n;
    return n;
  }
};

}  // namespace dlf
