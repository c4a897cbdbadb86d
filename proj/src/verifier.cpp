#include "lid/verifier.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "lid/errors.hpp"

namespace lid {

namespace {

void require_total(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw usage_error("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                      std::to_string(g.vertex_count()));
  }
}

Palette palette_unchecked(const Graph& g, const Coloring& c, Vertex v) {
  Palette p;
  p.reserve(g.degree(v) + 1);
  p.push_back(c[v]);
  for (Vertex w : g.neighbor_list(v)) p.push_back(c[w]);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

}  // namespace

Palette palette(const Graph& g, const Coloring& c, Vertex v) {
  require_total(g, c);
  g.check_vertex(v);
  return palette_unchecked(g, c, v);
}

LidReport verify_lid(const Graph& g, const Coloring& c) {
  require_total(g, c);
  LidReport report;
  report.colors_used = c.distinct_count();
  std::vector<Palette> palettes;
  palettes.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) palettes.push_back(palette_unchecked(g, c, v));

  for (const Edge& e : g.edges()) {
    if (c[e.u] == c[e.v]) report.improper_edges.push_back(e);
    if (palettes[e.u] == palettes[e.v] && !are_twins(g, e.u, e.v)) report.unseparated_edges.push_back(e);
  }
  return report;
}

Palette separating_colors(const Graph& g, const Coloring& c, Vertex u, Vertex v) {
  require_total(g, c);
  if (!g.adjacent(u, v)) {
    throw usage_error("vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
  }
  Palette pu = palette_unchecked(g, c, u);
  Palette pv = palette_unchecked(g, c, v);
  Palette out;
  std::set_symmetric_difference(pu.begin(), pu.end(), pv.begin(), pv.end(), std::back_inserter(out));
  return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) return false;
  for (const Edge& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

}  // namespace lid
