#include "lid/lid_layers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "lid/bondy.hpp"
#include "lid/errors.hpp"
#include "lid/lid_treedepth.hpp"
#include "lid/minor.hpp"
#include "lid/oracle.hpp"
#include "lid/treedepth.hpp"
#include "lid/verifier.hpp"

namespace lid {

namespace {

constexpr std::size_t brute_layer_limit = 10;
constexpr std::size_t exact_proper_limit = 12;
constexpr std::size_t exact_td_limit = 20;
constexpr std::size_t minor_certify_limit = 12;

VertexSet adjacent_layers(const LayerDecomposition& layers, std::size_t i, std::size_t n) {
  VertexSet out(n);
  if (i > 0) out |= layers.layers[i - 1];
  if (i + 1 < layers.layers.size()) out |= layers.layers[i + 1];
  return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

Coloring color_layer(const Graph& layer, const LayersOptions& options) {
  if (layer.vertex_count() == 0) return Coloring();
  LayerColorer strategy = options.layer_colorer;
  if (strategy == LayerColorer::automatic) {
    strategy = layer.vertex_count() <= brute_layer_limit ? LayerColorer::brute : LayerColorer::recursive;
  }
  switch (strategy) {
    case LayerColorer::brute:
      return chi_lid_exact(layer).witness.normalized();
    case LayerColorer::treedepth: {
      EliminationForest t = layer.vertex_count() <= exact_td_limit ? treedepth_exact(layer).witness
                                                                    : heuristic_forest(layer);
      return lid_color_td(layer, t);
    }
    case LayerColorer::recursive: {
      LayersOptions inner;
      inner.layer_colorer = LayerColorer::automatic;
      inner.proper_colorer = options.proper_colorer;
      return lid_color_layers(layer, inner).coloring;
    }
    case LayerColorer::automatic:
      break;
  }
  throw internal_error("unhandled layer colorer");
}

Coloring color_proper(const Graph& h, ProperColorer strategy) {
  if (h.vertex_count() == 0) return Coloring();
  if (strategy == ProperColorer::automatic) {
    strategy = h.vertex_count() <= exact_proper_limit ? ProperColorer::exact : ProperColorer::dsatur;
  }
  if (strategy == ProperColorer::exact) return chi_exact(h).witness.normalized();
  return dsatur_coloring(h);
}

// Everything the per-edge checks need about one component, in g's indices.
struct ComponentRun {
  Graph graph;
  std::vector<Vertex> to_parent;
  LayerDecomposition layers;
  TwinCliqueCover cover;
  std::vector<Color> c2;  // component-local
};

std::string edge_text(const ComponentRun& run, const Edge& e) {
  std::ostringstream os;
  os << "edge " << run.to_parent[e.u] << ' ' << run.to_parent[e.v];
  return os.str();
}

Color first_separator(const ComponentRun& run, const Coloring& c, const Edge& e) {
  Palette diff = separating_colors(run.graph, c, e.u, e.v);
  if (diff.empty()) throw internal_error("no color separates " + edge_text(run, e));
  return diff.front();
}

// Re-checks the three separation arguments on every distinguishable edge.
void check_cases(const ComponentRun& run, const Coloring& global, bool debug_checks, std::vector<std::string>* trace) {
  const Graph& g = run.graph;
  Coloring c(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) c[v] = global[run.to_parent[v]];
  auto c1_palette = [&](Vertex v) {
    VertexSet seen(4);
    for (Vertex w : closed_neighborhood(g, v)) seen.insert(static_cast<Vertex>(run.layers.layer_of[w] % 4));
    return seen;
  };
  auto layer_palette = [&](Vertex v) {
    std::vector<Color> out;
    const std::size_t i = run.layers.layer_of[v];
    for (Vertex w : closed_neighborhood(g, v))
      if (run.layers.layer_of[w] == i) out.push_back(run.c2[w]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  for (const Edge& e : g.edges()) {
    if (are_twins(g, e.u, e.v)) continue;
    const std::size_t lu = run.layers.layer_of[e.u];
    const std::size_t lv = run.layers.layer_of[e.v];
    std::ostringstream line;
    if (lu != lv) {
      if (c1_palette(e.u) == c1_palette(e.v) && debug_checks) {
        throw internal_error("layer colors do not separate " + edge_text(run, e));
      }
      line << "case 1 " << edge_text(run, e) << " separator " << first_separator(run, c, e);
    } else {
      const VertexSet& layer = run.layers.layers[lu];
      const bool layer_twins = (closed_neighborhood(g, e.u) & layer) == (closed_neighborhood(g, e.v) & layer);
      if (!layer_twins) {
        if (layer_palette(e.u) == layer_palette(e.v) && debug_checks) {
          throw internal_error("layer lid-coloring does not separate " + edge_text(run, e));
        }
        line << "case 2 " << edge_text(run, e) << " separator " << first_separator(run, c, e);
      } else {
        auto it = std::find_if(run.cover.cliques.begin(), run.cover.cliques.end(),
                               [&](const TwinClique& q) { return q.members.contains(e.u); });
        if (it == run.cover.cliques.end() || !it->members.contains(e.v)) {
          throw internal_error("layer twins outside a common twin clique at " + edge_text(run, e));
        }
        const VertexSet diff = distinguishers(g, e.u, e.v) & it->bondy;
        if (diff.empty()) throw internal_error("no scheduled distinguisher for " + edge_text(run, e));
        const Vertex v = diff.first();
        const Vertex far = g.adjacent(v, e.u) || v == e.u ? e.v : e.u;
        const Palette far_palette = palette(g, c, far);
        if (debug_checks && std::binary_search(far_palette.begin(), far_palette.end(), c[v])) {
          throw internal_error("distinguisher color reappears next to the other endpoint of " + edge_text(run, e));
        }
        line << "case 3 " << edge_text(run, e) << " separator " << run.to_parent[v];
      }
    }
    if (trace) trace->push_back(line.str());
  }
}

}  // namespace

TwinCliqueCover build_twin_cover(const Graph& g, const LayerDecomposition& layers) {
  TwinCliqueCover cover;
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    const InducedSubgraph& lg = layers.layer_graphs[i];
    std::map<VertexSet, VertexSet> classes;  // layer-closed neighborhood -> members
    for (Vertex local = 0; local < lg.graph.vertex_count(); ++local) {
      VertexSet key = closed_neighborhood(g, lg.to_parent[local]) & layers.layers[i];
      auto it = classes.try_emplace(std::move(key), VertexSet(n)).first;
      it->second.insert(lg.to_parent[local]);
    }
    VertexSet identified(n);
    std::vector<VertexSet> found;
    for (auto& [key, members] : classes)
      if (members.count() >= 2) found.push_back(members);
    std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    const VertexSet ground = adjacent_layers(layers, i, n);
    for (VertexSet& members : found) {
      identified |= members;
      VertexSet bondy(n);
      try {
        bondy = distinguishing_set(g, members, ground);
      } catch (const usage_error& e) {
        throw internal_error(std::string("twin class in layer ") + std::to_string(i) + " is not a valid clique: " +
                             e.what());
      }
      cover.cliques.push_back({i, std::move(members), std::move(bondy)});
    }
    cover.identified.push_back(std::move(identified));
  }
  return cover;
}

PairSchedule schedule_pairs(const LayerDecomposition& layers, const TwinCliqueCover& cover) {
  PairSchedule out;
  out.cells.resize(layers.layers.size());
  for (std::size_t q = 0; q < cover.cliques.size(); ++q) {
    for (Vertex v : cover.cliques[q].bondy) {
      auto& row = out.cells[layers.layer_of[v]];
      std::size_t k = 0;
      while (k < row.size() && std::any_of(row[k].begin(), row[k].end(),
                                           [&](const ScheduledPair& p) { return p.clique == q; })) {
        ++k;
      }
      if (k == row.size()) row.emplace_back();
      row[k].push_back({v, q});
      out.slot_count = std::max(out.slot_count, k + 1);
    }
  }
  for (auto& row : out.cells) row.resize(out.slot_count);
  return out;
}

LayerMinor build_hik(const Graph& g, const LayerDecomposition& layers, const TwinCliqueCover& cover, std::size_t layer,
                     const std::vector<ScheduledPair>& cell) {
  const InducedSubgraph& lg = layers.layer_graphs[layer];
  const std::size_t n = g.vertex_count();
  LayerMinor out;
  out.branch_sets.reserve(lg.to_parent.size());
  for (Vertex v : lg.to_parent) out.branch_sets.push_back(VertexSet::from_range(n, {v}));

  // owner[x] = local vertex whose branch set absorbed x
  std::vector<std::optional<Vertex>> owner(n);
  for (Vertex local = 0; local < lg.to_parent.size(); ++local) owner[lg.to_parent[local]] = local;
  for (const ScheduledPair& p : cell) {
    auto x = lg.local(p.vertex);
    if (!x) throw usage_error("scheduled vertex " + std::to_string(p.vertex) + " is not in layer " + std::to_string(layer));
    for (Vertex m : cover.cliques.at(p.clique).members) {
      if (owner[m] && *owner[m] != *x) throw usage_error("cell merges one clique vertex twice");
      owner[m] = *x;
      out.branch_sets[*x].insert(m);
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!owner[e.u] || !owner[e.v] || *owner[e.u] == *owner[e.v]) continue;
    edges.push_back({std::min(*owner[e.u], *owner[e.v]), std::max(*owner[e.u], *owner[e.v])});
  }
  out.graph = Graph(lg.to_parent.size(), edges);
  return out;
}

Coloring dsatur_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr Color none = std::numeric_limits<Color>::max();
  std::vector<Color> colors(n, none);
  std::vector<std::vector<bool>> blocked(n);
  std::vector<std::size_t> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex v = 0;
    bool found = false;
    for (Vertex x = 0; x < n; ++x) {
      if (colors[x] != none) continue;
      if (!found || saturation[x] > saturation[v]) {
        v = x;
        found = true;
      }
    }
    Color c = 0;
    while (c < blocked[v].size() && blocked[v][c]) ++c;
    colors[v] = c;
    for (Vertex w : g.neighbor_list(v)) {
      if (colors[w] != none) continue;
      if (blocked[w].size() <= c) blocked[w].resize(c + 1, false);
      if (!blocked[w][c]) {
        blocked[w][c] = true;
        ++saturation[w];
      }
    }
  }
  return Coloring(std::move(colors));
}

LayersColoring lid_color_layers(const Graph& g, const LayersOptions& options) {
  const std::size_t n = g.vertex_count();
  LayersColoring out;
  LayersAccounting& acc = out.accounting;

  if (options.minor_bound) {
    if (n <= minor_certify_limit) acc.minor_certified = !has_clique_minor(g, *options.minor_bound);
  }

  std::vector<ComponentRun> runs;
  std::vector<std::vector<Color>> c3_slots;  // [slot][vertex of g]
  std::vector<Color> c1(n, 0), c2(n, 0);

  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced(g, comp);
    const Graph& h = sub.graph;
    Vertex root = 0;
    for (Vertex v = 1; v < h.vertex_count(); ++v)
      if (h.degree(v) < h.degree(root)) root = v;

    ComponentRun run{h, sub.to_parent, bfs_layers(h, root), {}, std::vector<Color>(h.vertex_count(), 0)};
    run.cover = build_twin_cover(h, run.layers);
    acc.c1_palette = std::max(acc.c1_palette, std::min<std::size_t>(4, run.layers.layers.size()));

    for (std::size_t i = 0; i < run.layers.layers.size(); ++i) {
      const InducedSubgraph& lg = run.layers.layer_graphs[i];
      Coloring layer_coloring = color_layer(lg.graph, options);
      if (!verify_lid(lg.graph, layer_coloring).valid()) {
        throw internal_error("layer colorer returned an invalid coloring for layer " + std::to_string(i));
      }
      acc.c2_palette = std::max(acc.c2_palette, layer_coloring.distinct_count());
      for (Vertex local = 0; local < lg.to_parent.size(); ++local) {
        run.c2[lg.to_parent[local]] = layer_coloring[local];
        c1[sub.to_parent[lg.to_parent[local]]] = i % 4;
        c2[sub.to_parent[lg.to_parent[local]]] = layer_coloring[local];
      }
    }

    for (const TwinClique& q : run.cover.cliques) acc.max_bondy = std::max(acc.max_bondy, q.bondy.count());

    PairSchedule schedule = schedule_pairs(run.layers, run.cover);
    if (c3_slots.size() < schedule.slot_count) {
      c3_slots.resize(schedule.slot_count, std::vector<Color>(n, 0));
      acc.slot_palettes.resize(schedule.slot_count, 0);
    }
    for (std::size_t k = 0; k < schedule.slot_count; ++k) {
      for (std::size_t i = 0; i < run.layers.layers.size(); ++i) {
        LayerMinor minor = build_hik(h, run.layers, run.cover, i, schedule.cell(i, k));
        if (options.debug_checks && !is_minor_model(h, minor.graph, minor.branch_sets)) {
          throw internal_error("contraction graph is not certified as a minor");
        }
        Coloring cell_coloring = color_proper(minor.graph, options.proper_colorer);
        if (!is_proper(minor.graph, cell_coloring)) throw internal_error("proper colorer returned an improper coloring");
        acc.slot_palettes[k] = std::max(acc.slot_palettes[k], cell_coloring.distinct_count());
        const InducedSubgraph& lg = run.layers.layer_graphs[i];
        for (Vertex local = 0; local < lg.to_parent.size(); ++local) {
          c3_slots[k][sub.to_parent[lg.to_parent[local]]] = cell_coloring[local];
        }
      }
    }
    runs.push_back(std::move(run));
  }

  if (options.minor_bound) acc.slot_bound_ok = acc.max_bondy + 3 <= *options.minor_bound;

  std::map<std::vector<Color>, Color> rank;
  std::vector<std::vector<Color>> keys(n);
  for (Vertex v = 0; v < n; ++v) {
    keys[v] = {c1[v], c2[v]};
    for (const auto& slot : c3_slots) keys[v].push_back(slot[v]);
    rank.emplace(keys[v], 0);
  }
  Color next = 0;
  for (auto& [key, id] : rank) id = next++;
  std::vector<Color> colors(n);
  for (Vertex v = 0; v < n; ++v) colors[v] = rank.at(keys[v]);
  out.coloring = Coloring(std::move(colors));

  acc.colors_used = out.coloring.distinct_count();
  acc.bound = saturating_mul(acc.c1_palette, acc.c2_palette);
  for (std::size_t p : acc.slot_palettes) acc.bound = saturating_mul(acc.bound, p);
  if (n > 0 && acc.colors_used > acc.bound) {
    throw internal_error("layer construction uses " + std::to_string(acc.colors_used) + " colors, accounting bound is " +
                         std::to_string(acc.bound));
  }

  if (options.debug_checks || options.debug_trace) {
    for (const ComponentRun& run : runs) {
      check_cases(run, out.coloring, options.debug_checks, options.debug_trace ? &out.trace : nullptr);
    }
  }
  if (options.debug_checks && !verify_lid(g, out.coloring).valid()) {
    throw internal_error("layer construction produced an invalid coloring");
  }
  return out;
}

}  // namespace lid
