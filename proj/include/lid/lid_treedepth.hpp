#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lid/coloring.hpp"
#include "lid/graph.hpp"
#include "lid/treedepth.hpp"

namespace lid {

/// The unique-per-level prefix r_1..r_s of a non-path elimination tree, and the
/// connected components of g - R (ascending by smallest vertex).
struct RootPathContext {
  std::vector<Vertex> root_path;
  std::vector<VertexSet> components;
};

struct NormalizedRootPath {
  EliminationForest forest;
  RootPathContext context;
};

/// Relocates subtrees until every r_i has a neighbour in every component of g - R.
///
/// Each round rebuilds the tree as the chain R with one subtree per component of
/// g - R below r_s. If some r_i misses some component G_m, r_i is moved to the
/// bottom of the chain and G_m's subtree is re-attached to the new r_{s-1}; the
/// tree then has two vertices at height s, so s strictly shrinks. Height never grows.
///
/// Returns nullopt for the path case (t is a single chain). Throws usage_error if
/// g is disconnected or t is not a valid witness for g.
std::optional<NormalizedRootPath> normalize_root_path(const Graph& g, const EliminationForest& t);

struct LayerColorNormalization {
  Coloring coloring;  // input coloring composed with a color permutation
  std::size_t s = 0;  // colors 0..s-1 are the low block
};

/// Permutes the colors of one component so that every r_i sees one of the colors
/// 0..s-1 inside the component, and each of those colors is the only low color
/// some r_i sees there. `c` colors component.graph; `root_path` is in g's indices.
///
/// Throws usage_error if some r_i has no neighbour in the component.
LayerColorNormalization normalize_layer_colors(const Graph& g, const InducedSubgraph& component, const Coloring& c,
                                               std::span<const Vertex> root_path);

struct TdColoringOptions {
  /// Re-check the intermediate claims of the construction and throw internal_error
  /// on any failure.
  bool debug_checks = false;
  /// Capacity for the exact solver when no forest is supplied.
  std::size_t exact_limit = 20;
};

/// Locally identifying coloring with at most 2*height(t) - 1 colors. Without t, an
/// optimal forest from treedepth_exact is used. Components share one palette.
/// Colors in the result are dense, numbered by first appearance.
///
/// Throws usage_error if t is not a valid witness for g.
Coloring lid_color_td(const Graph& g, const std::optional<EliminationForest>& t = std::nullopt,
                      const TdColoringOptions& options = {});

}  // namespace lid
