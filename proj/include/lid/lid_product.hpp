#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lid/coloring.hpp"
#include "lid/graph.hpp"

namespace lid {

/// Vertex partition into classes 0..class_count-1 (some classes may be empty).
struct LowTdColoring {
  std::vector<std::uint32_t> classes;
  std::size_t class_count = 0;

  /// Densifies arbitrary color ids into classes 0..q-1 by first appearance.
  static LowTdColoring from_coloring(const Coloring& c);
};

/// True iff the union of every i <= p classes induces tree-depth <= i (subsets of
/// size up to min(p, class_count)). Each union is solved with treedepth_exact, so
/// unions above `limit` vertices throw capacity_error.
bool validate_lowtd(const Graph& g, const LowTdColoring& a, std::size_t p = 3, std::size_t limit = 20);

struct ProductColoring {
  Coloring coloring;                               // dense ids, lexicographic in the tuples
  std::vector<std::array<std::uint32_t, 3>> triples;  // class triples, lexicographic
  std::vector<std::vector<std::uint8_t>> tuples;      // per vertex: one entry per triple, 0 = outside H_A
  std::size_t class_count = 0;                        // after padding to at least 3
};

/// Colors each vertex by the tuple (c_A(x))_A over all class triples A, where c_A
/// is a tree-depth lid-coloring of H_A = g[classes in A] shifted to 1..5 and 0
/// marks vertices outside H_A. Fewer than 3 classes are padded with empty ones.
/// Tuples are numbered densely in lexicographic order, which is the order of their
/// base-6 positional values.
///
/// Throws usage_error if `a` is not a valid low tree-depth coloring for p = 3.
ProductColoring lid_color_product(const Graph& g, const LowTdColoring& a, std::size_t limit = 20);

/// 6^(q choose 3) for q >= 3, and 6 for q < 3; saturates at SIZE_MAX.
std::size_t product_color_bound(std::size_t q);

}  // namespace lid
