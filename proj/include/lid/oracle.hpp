#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lid/coloring.hpp"
#include "lid/graph.hpp"

namespace lid {

struct OracleResult {
  std::size_t value = 0;
  Coloring witness;  // empty when exceeded_limit
  std::uint64_t nodes_explored = 0;
  /// No witness within the color limit; value is then limit + 1.
  bool exceeded_limit = false;
};

struct OracleCaps {
  std::size_t chi_lid = 12;
  std::size_t chi = 40;
  std::size_t chi_td = 10;
};

/// Exact lid-chromatic number. Backtracking over proper colorings in BFS order,
/// colors introduced in ascending order of first use. The separation test for an
/// edge uv runs once all of N[u] and N[v] is colored. `max_colors` defaults to n.
/// Throws capacity_error above `cap` vertices.
OracleResult chi_lid_exact(const Graph& g, std::optional<std::size_t> max_colors = std::nullopt,
                           std::size_t cap = OracleCaps{}.chi_lid);

/// Exact chromatic number (DSATUR-ordered backtracking for increasing k).
OracleResult chi_exact(const Graph& g, std::size_t cap = OracleCaps{}.chi);

/// Minimum number of classes of a low tree-depth coloring with parameter p.
/// Partial assignments are pruned as soon as some union of i <= p classes already
/// has tree-depth above i, which is sound because tree-depth is monotone under
/// induced subgraphs.
OracleResult chi_td_p_exact(const Graph& g, std::size_t p, std::size_t cap = OracleCaps{}.chi_td);

}  // namespace lid
