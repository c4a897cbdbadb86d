#include "lid/lid_treedepth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lid/bondy.hpp"
#include "lid/errors.hpp"
#include "lid/verifier.hpp"

namespace lid {

namespace {

// Chain `chain` (top first), then every component's own subtree hung below
// chain.back(), except `lifted` which hangs one level higher.
EliminationForest rebuild(const EliminationForest& t, const std::vector<Vertex>& chain,
                          const std::vector<VertexSet>& components, std::optional<std::size_t> lifted) {
  std::vector<std::optional<Vertex>> parent(t.size());
  for (std::size_t i = 1; i < chain.size(); ++i) parent[chain[i]] = chain[i - 1];
  for (std::size_t m = 0; m < components.size(); ++m) {
    const Vertex anchor = (lifted && *lifted == m) ? chain[chain.size() - 2] : chain.back();
    std::vector<Vertex> members = components[m].to_vector();
    EliminationForest sub = restrict_forest(t, components[m]);
    for (Vertex i = 0; i < members.size(); ++i) {
      auto p = sub.parent(i);
      parent[members[i]] = p ? members[*p] : anchor;
    }
  }
  return EliminationForest(std::move(parent));
}

std::vector<Vertex> prefix_chain(const EliminationForest& t, const std::vector<std::vector<Vertex>>& children) {
  std::vector<Vertex> chain{t.roots().front()};
  while (children[chain.back()].size() == 1) chain.push_back(children[chain.back()].front());
  return chain;
}

// Per-edge proper/separated flags, used to check the refinement claim.
struct EdgeStatus {
  std::vector<bool> proper;
  std::vector<bool> separated;
};

EdgeStatus edge_status(const Graph& g, const Coloring& c) {
  EdgeStatus st;
  for (const Edge& e : g.edges()) {
    st.proper.push_back(c[e.u] != c[e.v]);
    st.separated.push_back(palette(g, c, e.u) != palette(g, c, e.v));
  }
  return st;
}

void require_no_regression(const EdgeStatus& before, const EdgeStatus& after) {
  for (std::size_t i = 0; i < before.proper.size(); ++i) {
    if ((before.proper[i] && !after.proper[i]) || (before.separated[i] && !after.separated[i])) {
      throw internal_error("recoloring with a fresh color broke a proper or separated edge");
    }
  }
}

class TdColorer {
 public:
  explicit TdColorer(const TdColoringOptions& options) : options_(options) {}

  // g connected, t a single tree valid for g. Returns dense colors.
  Coloring color_connected(const Graph& g, const EliminationForest& t) const {
    const std::size_t n = g.vertex_count();
    if (n == 1) return Coloring(1, 0);
    if (t.is_path()) {
      std::vector<Color> distinct(n);
      std::iota(distinct.begin(), distinct.end(), Color{0});
      return Coloring(std::move(distinct));
    }

    auto normalized = normalize_root_path(g, t);
    if (!normalized) throw internal_error("non-path tree reported as a path");
    const EliminationForest& forest = normalized->forest;
    const std::vector<Vertex>& roots = normalized->context.root_path;
    const std::vector<VertexSet>& comps = normalized->context.components;
    const std::size_t k = forest.height();
    const std::size_t s = roots.size();
    const std::size_t k_sub = k - s;

    std::vector<InducedSubgraph> subs;
    std::vector<LayerColorNormalization> parts;
    for (const VertexSet& comp : comps) {
      subs.push_back(induced(g, comp));
      Coloring sub_coloring = color_connected(subs.back().graph, restrict_forest(forest, comp));
      if (sub_coloring.distinct_count() > 2 * k_sub - 1) {
        throw internal_error("component coloring exceeds 2k'-1 colors");
      }
      parts.push_back(normalize_layer_colors(g, subs.back(), sub_coloring, roots));
    }

    std::vector<std::size_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return parts[a].s > parts[b].s; });
    const std::size_t s_first = parts[order.front()].s;

    // base colors 0..2k'-2, then primed, starred and distinguishing colors
    Color next = 2 * k_sub - 1;
    Coloring c(n, 0);
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const bool primed = j == order.front();
      for (Vertex local = 0; local < subs[j].to_parent.size(); ++local) {
        Color col = parts[j].coloring[local];
        if (primed && col < s_first) col += next;
        c[subs[j].to_parent[local]] = col;
      }
    }
    next += s_first;
    for (Vertex r : roots) c[r] = next++;

    if (options_.debug_checks) check_before_refinement(g, c, roots);

    // classes of R with equal palettes, in order of first member along the chain
    std::vector<std::vector<Vertex>> classes;
    std::vector<Palette> class_palette;
    for (Vertex r : roots) {
      Palette p = palette(g, c, r);
      auto it = std::find(class_palette.begin(), class_palette.end(), p);
      if (it == class_palette.end()) {
        class_palette.push_back(std::move(p));
        classes.push_back({r});
      } else {
        classes[static_cast<std::size_t>(it - class_palette.begin())].push_back(r);
      }
    }
    const std::size_t s_bar = classes.size();
    if (s_first > s_bar) {
      throw internal_error("root path has " + std::to_string(s_bar) + " palette classes but s_1 = " +
                           std::to_string(s_first));
    }

    VertexSet recolored(n);
    for (const auto& cls : classes) {
      if (cls.size() < 2) continue;
      VertexSet members(n);
      for (Vertex r : cls) members.insert(r);
      for (Vertex v : distinguishing_set(g, members)) {
        if (recolored.contains(v)) continue;
        recolored.insert(v);
        if (options_.debug_checks) {
          EdgeStatus before = edge_status(g, c);
          c[v] = next++;
          require_no_regression(before, edge_status(g, c));
        } else {
          c[v] = next++;
        }
      }
    }

    const std::size_t bound = 2 * k - 1;
    if ((s - s_bar) + (2 * k_sub - 1) + s_first + s > bound) {
      throw internal_error("color accounting exceeds 2k-1");
    }
    if (c.distinct_count() > bound) {
      throw internal_error("coloring uses " + std::to_string(c.distinct_count()) + " colors, bound is " +
                           std::to_string(bound));
    }
    if (options_.debug_checks && !verify_lid(g, c).valid()) {
      throw internal_error("tree-depth construction produced an invalid coloring");
    }
    return c.normalized();
  }

 private:
  // After the starred colors: c is proper, every edge x r_i with x outside R is
  // separated, and every non-twin edge inside a component is separated.
  static void check_before_refinement(const Graph& g, const Coloring& c, const std::vector<Vertex>& roots) {
    VertexSet in_roots(g.vertex_count());
    for (Vertex r : roots) in_roots.insert(r);
    for (const Edge& e : g.edges()) {
      if (c[e.u] == c[e.v]) throw internal_error("construction is not proper before refinement");
      const bool u_root = in_roots.contains(e.u);
      const bool v_root = in_roots.contains(e.v);
      if (u_root && v_root) continue;
      if (u_root != v_root) {
        if (palette(g, c, e.u) == palette(g, c, e.v)) {
          throw internal_error("edge between a component and the root path is not separated");
        }
        continue;
      }
      if (!are_twins(g, e.u, e.v) && palette(g, c, e.u) == palette(g, c, e.v)) {
        throw internal_error("distinguishable edge inside a component is not separated");
      }
    }
  }

  TdColoringOptions options_;
};

}  // namespace

std::optional<NormalizedRootPath> normalize_root_path(const Graph& g, const EliminationForest& t) {
  if (!validate_witness(g, t)) throw usage_error("forest is not a valid witness for the graph");
  if (!is_connected(g) || g.vertex_count() == 0) throw usage_error("root-path normalization needs a connected graph");

  EliminationForest forest = t;
  for (;;) {
    auto children = forest.children();
    std::vector<Vertex> chain = prefix_chain(forest, children);
    if (children[chain.back()].empty()) return std::nullopt;

    VertexSet rest = g.all_vertices();
    for (Vertex r : chain) rest.erase(r);
    std::vector<VertexSet> comps = connected_components(g, rest);
    forest = rebuild(forest, chain, comps, std::nullopt);

    std::optional<std::pair<std::size_t, std::size_t>> lacking;
    for (std::size_t i = 0; i < chain.size() && !lacking; ++i) {
      for (std::size_t m = 0; m < comps.size(); ++m) {
        if (!g.neighbors(chain[i]).intersects(comps[m])) {
          lacking = {i, m};
          break;
        }
      }
    }
    if (!lacking) return NormalizedRootPath{forest, {chain, comps}};
    if (chain.size() < 2) throw internal_error("a component of g - R is detached from a connected graph");

    const Vertex moved = chain[lacking->first];
    chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(lacking->first));
    chain.push_back(moved);
    forest = rebuild(forest, chain, comps, lacking->second);
  }
}

LayerColorNormalization normalize_layer_colors(const Graph& g, const InducedSubgraph& component, const Coloring& c,
                                               std::span<const Vertex> root_path) {
  if (c.size() != component.graph.vertex_count()) throw usage_error("coloring does not cover the component");
  VertexSet members(g.vertex_count());
  for (Vertex v : component.to_parent) members.insert(v);

  LayerColorNormalization out{c, 0};
  auto seen_colors = [&](Vertex r) {
    std::vector<Color> seen;
    for (Vertex x : g.neighbor_list(r))
      if (members.contains(x)) seen.push_back(out.coloring[*component.local(x)]);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen;
  };
  for (Vertex r : root_path) {
    if (!g.neighbors(r).intersects(members)) {
      throw usage_error("root-path vertex " + std::to_string(r) + " has no neighbour in the component");
    }
  }

  for (;;) {
    std::vector<std::vector<Color>> seen;
    for (Vertex r : root_path) seen.push_back(seen_colors(r));
    Color s = 0;
    for (const auto& colors : seen) s = std::max(s, colors.front() + 1);
    out.s = static_cast<std::size_t>(s);

    // a color a < s is witnessed if some r_i sees a and no other color below s
    std::optional<Color> unwitnessed;
    for (Color a = 0; a < s && !unwitnessed; ++a) {
      bool witnessed = false;
      for (const auto& colors : seen) {
        auto low_end = std::lower_bound(colors.begin(), colors.end(), s);
        if (low_end - colors.begin() == 1 && colors.front() == a) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) unwitnessed = a;
    }
    if (!unwitnessed) return out;
    if (*unwitnessed == s - 1) throw internal_error("top low color unwitnessed although s is minimal");

    std::vector<Color> recolored = out.coloring.colors();
    for (Color& col : recolored) {
      if (col == *unwitnessed) {
        col = s - 1;
      } else if (col == s - 1) {
        col = *unwitnessed;
      }
    }
    out.coloring = Coloring(std::move(recolored));
  }
}

Coloring lid_color_td(const Graph& g, const std::optional<EliminationForest>& t, const TdColoringOptions& options) {
  EliminationForest forest = t ? *t : treedepth_exact(g, options.exact_limit).witness;
  if (!validate_witness(g, forest)) throw usage_error("forest is not a valid witness for the graph");

  TdColorer colorer(options);
  Coloring out(g.vertex_count(), 0);
  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced(g, comp);
    Coloring part = colorer.color_connected(sub.graph, restrict_forest(forest, comp));
    for (Vertex local = 0; local < sub.to_parent.size(); ++local) out[sub.to_parent[local]] = part[local];
  }
  return out.normalized();
}

}  // namespace lid
