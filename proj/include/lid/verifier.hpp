#pragma once

#include <cstddef>
#include <vector>

#include "lid/coloring.hpp"
#include "lid/graph.hpp"

namespace lid {

/// Sorted, duplicate-free list of colors.
using Palette = std::vector<Color>;

/// Outcome of checking a coloring against the locally identifying conditions.
/// Edge lists hold (u, v) with u < v in ascending order.
struct LidReport {
  std::vector<Edge> improper_edges;
  std::vector<Edge> unseparated_edges;  // non-twins with c(N[u]) == c(N[v])
  std::size_t colors_used = 0;

  bool valid() const { return improper_edges.empty() && unseparated_edges.empty(); }
};

/// c(N[v]). Throws usage_error if c does not cover every vertex of g.
Palette palette(const Graph& g, const Coloring& c, Vertex v);

/// Checks every edge; twin pairs are exempt from separation.
LidReport verify_lid(const Graph& g, const Coloring& c);

/// c(N[u]) xor c(N[v]). Throws usage_error when u and v are not adjacent.
Palette separating_colors(const Graph& g, const Coloring& c, Vertex u, Vertex v);

/// True when c is total on g and no edge is monochromatic.
bool is_proper(const Graph& g, const Coloring& c);

}  // namespace lid
