#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lid/graph.hpp"

namespace lid {

/// K_n on a_1..a_n plus a pendant b_i on every a_i with i < n.
/// Indices: a_i = i-1, b_i = n+i-1, so 2n-1 vertices in total.
struct HnGadget {
  Graph graph;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

HnGadget generate_hn(std::size_t n);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Center 0 with n-1 leaves.
Graph star_graph(std::size_t n);
/// k x k grid; vertex (r, c) is r*k + c.
Graph grid_graph(std::size_t k);

// Seeded generators: identical (n, seed) gives an identical graph.

/// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Maximal outerplanar graph: the n-gon 0..n-1 with a random triangulation.
Graph random_outerplanar(std::size_t n, std::uint64_t seed);
/// Stacked triangulation: start from a triangle, repeatedly insert a vertex into a
/// uniformly chosen inner face.
Graph random_apollonian(std::size_t n, std::uint64_t seed);
/// Erdos-Renyi G(n, p).
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace lid
