#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lid/coloring.hpp"
#include "lid/graph.hpp"

namespace lid {

/// A twin class of size >= 2 inside one layer graph, with its distinguishing set
/// taken from the two neighbouring layers.
struct TwinClique {
  std::size_t layer = 0;
  VertexSet members;
  VertexSet bondy;
};

struct TwinCliqueCover {
  std::vector<TwinClique> cliques;     // layer order, then smallest member
  std::vector<VertexSet> identified;   // per layer: vertices with a twin in the layer graph
};

/// Twin classes of every layer graph and their distinguishing sets, restricted to
/// the adjacent layers. A class that cannot be distinguished there is a bug and
/// throws internal_error.
TwinCliqueCover build_twin_cover(const Graph& g, const LayerDecomposition& layers);

struct ScheduledPair {
  Vertex vertex;
  std::size_t clique;  // index into TwinCliqueCover::cliques

  friend bool operator==(const ScheduledPair&, const ScheduledPair&) = default;
};

struct PairSchedule {
  std::size_t slot_count = 0;
  std::vector<std::vector<std::vector<ScheduledPair>>> cells;  // [layer][slot]

  const std::vector<ScheduledPair>& cell(std::size_t layer, std::size_t slot) const { return cells[layer][slot]; }
};

/// Places every (v, C) with v in S(C) into cell (layer of v, k) for the smallest k
/// whose cell does not hold C yet. Cliques are taken in cover order and each S(C)
/// in ascending vertex order.
PairSchedule schedule_pairs(const LayerDecomposition& layers, const TwinCliqueCover& cover);

/// The contraction graph of one cell, on the vertices of layer i (indexed like
/// layers.layer_graphs[i]). branch_sets[w] is the set of g-vertices merged into w,
/// so `is_minor_model(g, graph, branch_sets)` certifies it as a minor.
struct LayerMinor {
  Graph graph;
  std::vector<VertexSet> branch_sets;
};

LayerMinor build_hik(const Graph& g, const LayerDecomposition& layers, const TwinCliqueCover& cover, std::size_t layer,
                     const std::vector<ScheduledPair>& cell);

enum class LayerColorer { automatic, brute, treedepth, recursive };
enum class ProperColorer { automatic, exact, dsatur };

struct LayersOptions {
  LayerColorer layer_colorer = LayerColorer::automatic;
  ProperColorer proper_colorer = ProperColorer::automatic;
  /// Claimed K_n-minor-freeness. Certified by exhaustive search when g is small.
  std::optional<std::size_t> minor_bound;
  bool debug_checks = false;
  bool debug_trace = false;
};

struct LayersAccounting {
  std::size_t c1_palette = 0;
  std::size_t c2_palette = 0;                 // largest layer palette
  std::vector<std::size_t> slot_palettes;     // per slot, largest cell palette
  std::size_t bound = 0;                      // product of the above, saturating
  std::size_t colors_used = 0;
  std::size_t max_bondy = 0;                  // largest |S(C)| seen
  bool minor_certified = false;
  /// max_bondy <= n - 3 for the claimed minor bound n; unset without a claim.
  std::optional<bool> slot_bound_ok;
};

struct LayersColoring {
  Coloring coloring;
  LayersAccounting accounting;
  std::vector<std::string> trace;  // "case <1|2|3> edge <u> <v> separator <color|vertex>"
};

/// Colors every component from a minimum-degree root by the triple (layer mod 4,
/// layer lid-color, per-slot proper colors of the contraction graphs), flattened by
/// lexicographic rank.
LayersColoring lid_color_layers(const Graph& g, const LayersOptions& options = {});

/// Saturation greedy: highest saturation, then lowest index. Dense colors.
Coloring dsatur_coloring(const Graph& g);

}  // namespace lid
