#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lid/graph.hpp"

namespace lid {

/// Pairwise-distinct subsets of the ground set {0..ground_size-1}.
struct SetFamily {
  std::size_t ground_size = 0;
  std::vector<VertexSet> members;
};

struct BondyResult {
  VertexSet selected;
  std::vector<Vertex> added;  // elements in the order the greedy picked them
};

/// Finds X' with |X'| <= |members|-1 such that the traces A_i & X' are pairwise
/// distinct. Greedy: while the lowest-indexed pair (i, j) with equal traces exists,
/// add the smallest element of A_i xor A_j. Each step splits a trace class, so at
/// most |members|-1 steps run.
///
/// Throws usage_error if two members are equal or a member has the wrong universe.
BondyResult bondy_reduce(const SetFamily& family);

/// S(C) for a clique C of g: at most (#distinct N[v], v in C) - 1 vertices that
/// distinguish every non-twin pair of C. Twins collapse to one family member.
/// With `ground_restriction`, every N[v] is intersected with it first, so the
/// result stays inside the restriction.
///
/// Throws usage_error if `clique` is not a clique or if a non-twin pair has no
/// distinguisher inside the restriction.
VertexSet distinguishing_set(const Graph& g, const VertexSet& clique,
                             const std::optional<VertexSet>& ground_restriction = std::nullopt);

}  // namespace lid
