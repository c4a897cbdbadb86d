#pragma once

#include <cstddef>
#include <vector>

#include "lid/graph.hpp"

namespace lid {

/// Checks that `branch_sets` is a minor model of h in g: one nonempty branch set per
/// vertex of h, pairwise disjoint, each inducing a connected subgraph of g, and every
/// edge of h realised by a g-edge between the two branch sets.
bool is_minor_model(const Graph& g, const Graph& h, const std::vector<VertexSet>& branch_sets);

/// Exhaustive test for a K_t minor by searching edge-contraction sequences.
/// Throws capacity_error when g has more than `cap` vertices.
bool has_clique_minor(const Graph& g, std::size_t t, std::size_t cap = 12);

}  // namespace lid
