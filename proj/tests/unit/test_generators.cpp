#include <doctest.h>

#include "lid/errors.hpp"
#include "lid/generators.hpp"
#include "lid/graph.hpp"

using namespace lid;

TEST_CASE("H_n gadget sizes") {
  HnGadget h2 = generate_hn(2);
  CHECK(h2.graph.vertex_count() == 3);
  CHECK(h2.graph.edge_count() == 2);  // P3
  CHECK(h2.graph.degree(h2.a[0]) == 2);

  CHECK(generate_hn(3).graph.vertex_count() == 5);
  CHECK(generate_hn(3).graph.edge_count() == 5);
  CHECK(generate_hn(4).graph.vertex_count() == 7);
  CHECK(generate_hn(4).graph.edge_count() == 9);
  CHECK_THROWS_AS(generate_hn(1), usage_error);
}

TEST_CASE("H_n contains K_n and n-1 pendant vertices") {
  for (std::size_t n = 2; n <= 7; ++n) {
    HnGadget h = generate_hn(n);
    CHECK(is_clique(h.graph, VertexSet::from_range(h.graph.vertex_count(), h.a)));
    std::size_t leaves = 0;
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) leaves += h.graph.degree(v) == 1;
    // for n = 2 the gadget is P3, where a_2 is a leaf as well
    CHECK(leaves == (n == 2 ? 2 : n - 1));
  }
}

TEST_CASE("deterministic families") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(5).degree(0) == 4);
  CHECK(grid_graph(4).vertex_count() == 16);
  CHECK(grid_graph(4).edge_count() == 24);
}

TEST_CASE("seeded generators are reproducible and well-formed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(random_tree(10, seed) == random_tree(10, seed));
    Graph t = random_tree(15, seed);
    CHECK(t.edge_count() == 14);
    CHECK(is_connected(t));

    Graph o = random_outerplanar(12, seed);
    CHECK(o.edge_count() == 2 * 12 - 3);  // maximal outerplanar
    CHECK(is_connected(o));

    Graph a = random_apollonian(12, seed);
    CHECK(a.edge_count() == 3 * 12 - 6);  // triangulation
    CHECK(random_apollonian(12, seed) == a);
  }
  CHECK_FALSE(random_tree(12, 1) == random_tree(12, 2));
}
