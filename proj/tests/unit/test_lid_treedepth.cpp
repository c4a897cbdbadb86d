#include <doctest.h>

#include <random>

#include "lid/errors.hpp"
#include "lid/generators.hpp"
#include "lid/lid_treedepth.hpp"
#include "lid/verifier.hpp"
#include "oracles.hpp"

using namespace lid;

namespace {

EliminationForest forest(std::vector<std::optional<Vertex>> parent) { return EliminationForest(std::move(parent)); }

}  // namespace

TEST_CASE("root path of a star is its center") {
  Graph star = star_graph(5);
  auto r = normalize_root_path(star, forest({std::nullopt, 0u, 0u, 0u, 0u}));
  REQUIRE(r.has_value());
  CHECK(r->context.root_path == std::vector<Vertex>{0});
  CHECK(r->context.components.size() == 4);
}

TEST_CASE("root path of H_3 branching at a1") {
  // a1 = 0, a2 = 1, a3 = 2, b1 = 3, b2 = 4; tree a1 -> (a2 -> (a3, b2), b1)
  HnGadget h3 = generate_hn(3);
  auto r = normalize_root_path(h3.graph, forest({std::nullopt, 0u, 1u, 0u, 1u}));
  REQUIRE(r.has_value());
  CHECK(r->context.root_path == std::vector<Vertex>{0});
  REQUIRE(r->context.components.size() == 2);
  CHECK(r->context.components[0] == VertexSet::from_range(5, {1, 2, 4}));
  CHECK(r->context.components[1] == VertexSet::from_range(5, {3}));
}

TEST_CASE("root path relocation shrinks s") {
  // edges 0-1, 1-2, 1-3; tree 0 -> 1 -> {2, 3}; r_1 = 0 misses {2}
  Graph g(4, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}});
  auto r = normalize_root_path(g, forest({std::nullopt, 0u, 1u, 1u}));
  REQUIRE(r.has_value());
  CHECK(r->context.root_path == std::vector<Vertex>{1});
  CHECK(r->context.components.size() == 3);
  CHECK(validate_witness(g, r->forest));
  CHECK(r->forest.height() == 2);
}

TEST_CASE("root path normalization on a path witness and bad input") {
  CHECK_FALSE(normalize_root_path(path_graph(3), forest({std::nullopt, 0u, 1u})).has_value());
  CHECK_THROWS_AS(normalize_root_path(complete_graph(3), forest({std::nullopt, 0u, 0u})), usage_error);
  CHECK_THROWS_AS(normalize_root_path(Graph(2), forest({std::nullopt, 0u})), usage_error);
}

TEST_CASE("normalized root paths see every component") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 150; ++round) {
    Graph g = oracle::random_connected(3 + rng() % 12, 0.2, rng);
    EliminationForest t = round % 2 ? dfs_forest(g) : treedepth_exact(g).witness;
    auto r = normalize_root_path(g, t);
    if (!r) continue;
    CHECK(validate_witness(g, r->forest));
    CHECK(r->forest.height() <= t.height());
    CHECK(r->context.components.size() >= 2);
    for (Vertex x : r->context.root_path)
      for (const VertexSet& comp : r->context.components) CHECK(g.neighbors(x).intersects(comp));
  }
}

TEST_CASE("layer color normalization: single swap") {
  // r = 0 sees only vertex 1 of the component path 1-2-3
  Graph g(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  InducedSubgraph comp = induced(g, VertexSet::from_range(4, {1, 2, 3}));
  std::vector<Vertex> roots{0};
  auto r = normalize_layer_colors(g, comp, Coloring(std::vector<Color>{2, 0, 1}), roots);
  CHECK(r.s == 1);
  CHECK(r.coloring == Coloring(std::vector<Color>{0, 2, 1}));
}

TEST_CASE("layer color normalization: already minimal") {
  Graph g(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  InducedSubgraph comp = induced(g, VertexSet::from_range(4, {1, 2, 3}));
  std::vector<Vertex> roots{0};
  auto r = normalize_layer_colors(g, comp, Coloring(std::vector<Color>{0, 1, 0}), roots);
  CHECK(r.s == 1);
  CHECK(r.coloring == Coloring(std::vector<Color>{0, 1, 0}));
}

TEST_CASE("layer color normalization: two roots with disjoint low colors") {
  // component path 2-3-4-5 colored 0,1,2,3; root 0 sees color 1, root 1 sees color 3
  Graph g(6, std::vector<Edge>{{2, 3}, {3, 4}, {4, 5}, {0, 3}, {1, 5}});
  InducedSubgraph comp = induced(g, VertexSet::from_range(6, {2, 3, 4, 5}));
  std::vector<Vertex> roots{0, 1};
  auto r = normalize_layer_colors(g, comp, Coloring(std::vector<Color>{0, 1, 2, 3}), roots);
  CHECK(r.s == 2);
  CHECK(r.coloring.distinct_count() == 4);
  InducedSubgraph tail = induced(g, VertexSet::from_range(6, {4, 5}));
  CHECK_THROWS_AS(normalize_layer_colors(g, tail, Coloring(std::vector<Color>{0, 1}), std::vector<Vertex>{0}), usage_error);
}

TEST_CASE("lid_color_td examples") {
  CHECK(lid_color_td(Graph(1)).distinct_count() == 1);
  for (std::size_t n = 2; n <= 6; ++n) {
    Graph h = generate_hn(n).graph;
    Coloring c = lid_color_td(h);
    CHECK(verify_lid(h, c).valid());
    CHECK(c.distinct_count() == 2 * n - 1);
  }
  Coloring star = lid_color_td(star_graph(5));
  CHECK(verify_lid(star_graph(5), star).valid());
  CHECK(star.distinct_count() <= 3);
  CHECK(oracle::brute_chi_lid(star_graph(5)) == 3);
  CHECK_THROWS_AS(lid_color_td(complete_graph(3), forest({std::nullopt, 0u, 0u})), usage_error);
}

TEST_CASE("lid_color_td on random graphs with self-checks") {
  std::mt19937_64 rng(12);
  TdColoringOptions debug{true, 20};
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + rng() % 14;
    Graph g = random_gnp(n, 0.15 + 0.5 * (rng() % 100) / 100.0, rng());
    TreedepthResult td = treedepth_exact(g);
    Coloring c = lid_color_td(g, td.witness, debug);
    CHECK(verify_lid(g, c).valid());
    CHECK(c.distinct_count() <= 2 * td.depth - 1);
  }
  for (int round = 0; round < 40; ++round) {
    Graph t = random_tree(5 + rng() % 26, rng());
    EliminationForest f = heuristic_forest(t);
    Coloring c = lid_color_td(t, f, debug);
    CHECK(verify_lid(t, c).valid());
    CHECK(c.distinct_count() <= 2 * f.height() - 1);
  }
}

TEST_CASE("lid_color_td accepts a non-optimal witness") {
  Graph p = path_graph(7);
  EliminationForest chain = dfs_forest(p);
  Coloring c = lid_color_td(p, chain);
  CHECK(verify_lid(p, c).valid());
  CHECK(c.distinct_count() <= 2 * chain.height() - 1);
}
