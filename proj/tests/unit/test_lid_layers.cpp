#include <doctest.h>

#include <random>
#include <regex>

#include "lid/generators.hpp"
#include "lid/lid_layers.hpp"
#include "lid/minor.hpp"
#include "lid/oracle.hpp"
#include "lid/verifier.hpp"
#include "oracles.hpp"

using namespace lid;

namespace {

VertexSet set_of(std::size_t n, std::vector<Vertex> members) { return VertexSet::from_range(n, members); }

}  // namespace

TEST_CASE("twin covers") {
  LayerDecomposition p4 = bfs_layers(path_graph(4), 0);
  CHECK(build_twin_cover(path_graph(4), p4).cliques.empty());

  Graph k4 = complete_graph(4);
  TwinCliqueCover k = build_twin_cover(k4, bfs_layers(k4, 2));
  REQUIRE(k.cliques.size() == 1);
  CHECK(k.cliques[0].layer == 1);
  CHECK(k.cliques[0].members == set_of(4, {0, 1, 3}));
  CHECK(k.cliques[0].bondy.empty());

  // triangle a=0, b=1, c=2 with pendant p=3 on a, rooted at p
  Graph t(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  TwinCliqueCover tc = build_twin_cover(t, bfs_layers(t, 3));
  REQUIRE(tc.cliques.size() == 1);
  CHECK(tc.cliques[0].layer == 2);
  CHECK(tc.cliques[0].members == set_of(4, {1, 2}));
  CHECK(tc.cliques[0].bondy.empty());
  CHECK(tc.identified[2] == set_of(4, {1, 2}));
}

TEST_CASE("twin cover distinguishers live in adjacent layers") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_apollonian(8 + rng() % 30, rng());
    LayerDecomposition d = bfs_layers(g, 0);
    TwinCliqueCover cover = build_twin_cover(g, d);
    for (const TwinClique& q : cover.cliques) {
      CHECK(is_clique(g, q.members));
      CHECK_FALSE(q.bondy.intersects(d.layers[q.layer]));
      CHECK(q.bondy.count() + 1 <= q.members.count());
      for (Vertex v : q.bondy) {
        const auto j = d.layer_of[v];
        CHECK((j + 1 == q.layer || j == q.layer + 1));
      }
      for (Vertex x : q.members)
        for (Vertex y : q.members)
          if (x < y && !are_twins(g, x, y)) CHECK(distinguishers(g, x, y).intersects(q.bondy));
    }
  }
}

TEST_CASE("pair schedule") {
  LayerDecomposition p5 = bfs_layers(path_graph(5), 0);
  CHECK(schedule_pairs(p5, TwinCliqueCover{}).slot_count == 0);

  // synthetic: one clique in layer 2 distinguished by 1 (layer 1) and 3 (layer 3)
  TwinCliqueCover one;
  one.cliques.push_back({2, set_of(5, {2}), set_of(5, {1, 3})});
  PairSchedule s = schedule_pairs(p5, one);
  CHECK(s.slot_count == 1);
  CHECK(s.cell(1, 0) == std::vector<ScheduledPair>{{1, 0}});
  CHECK(s.cell(3, 0) == std::vector<ScheduledPair>{{3, 0}});

  // two distinguishers of one clique in the same layer need two slots
  LayerDecomposition star = bfs_layers(star_graph(4), 0);
  TwinCliqueCover two;
  two.cliques.push_back({0, set_of(4, {0}), set_of(4, {1, 2})});
  PairSchedule t = schedule_pairs(star, two);
  CHECK(t.slot_count == 2);
  CHECK(t.cell(1, 0) == std::vector<ScheduledPair>{{1, 0}});
  CHECK(t.cell(1, 1) == std::vector<ScheduledPair>{{2, 0}});
}

TEST_CASE("pair schedule: two cliques sharing a distinguisher share a cell") {
  // root 0; layer 1 = {1,2,3,4} with twin pairs {1,2} and {3,4}; vertex 5 sees 1 and 3
  Graph g(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {1, 5}, {3, 5}});
  LayerDecomposition d = bfs_layers(g, 0);
  TwinCliqueCover cover = build_twin_cover(g, d);
  REQUIRE(cover.cliques.size() == 2);
  CHECK(cover.cliques[0].bondy == set_of(6, {5}));
  CHECK(cover.cliques[1].bondy == set_of(6, {5}));
  PairSchedule s = schedule_pairs(d, cover);
  CHECK(s.slot_count == 1);
  CHECK(s.cell(2, 0) == std::vector<ScheduledPair>{{5, 0}, {5, 1}});

  // both cliques fold onto 5, which is the whole layer
  LayerMinor h = build_hik(g, d, cover, 2, s.cell(2, 0));
  CHECK(h.graph.vertex_count() == 1);
  CHECK(h.branch_sets[0] == set_of(6, {1, 2, 3, 4, 5}));
  CHECK(is_minor_model(g, h.graph, h.branch_sets));
}

TEST_CASE("contraction graphs of cells") {
  // root 0; layer 1 = {1, 2} independent; layer 2 = {3, 4}; 3 sees 1 and 2
  Graph g(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  LayerDecomposition d = bfs_layers(g, 0);
  REQUIRE(d.layers[1] == set_of(5, {1, 2}));

  LayerMinor plain = build_hik(g, d, TwinCliqueCover{}, 1, {});
  CHECK(plain.graph == d.layer_graphs[1].graph);

  TwinCliqueCover cover;
  cover.cliques.push_back({2, set_of(5, {3}), set_of(5, {1})});
  LayerMinor folded = build_hik(g, d, cover, 1, {{1, 0}});
  CHECK(folded.graph == complete_graph(2));
  CHECK(folded.branch_sets[0] == set_of(5, {1, 3}));
  CHECK(is_minor_model(g, folded.graph, folded.branch_sets));

  Graph k4 = complete_graph(4);
  LayerDecomposition dk = bfs_layers(k4, 0);
  CHECK(build_hik(k4, dk, build_twin_cover(k4, dk), 1, {}).graph == complete_graph(3));
}

TEST_CASE("dsatur coloring is proper") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 100; ++round) {
    Graph g = random_gnp(1 + rng() % 20, 0.3, rng());
    Coloring c = dsatur_coloring(g);
    CHECK(is_proper(g, c));
    CHECK(c.distinct_count() >= chi_exact(g).value);
  }
  CHECK(dsatur_coloring(complete_graph(5)).distinct_count() == 5);
  CHECK(dsatur_coloring(cycle_graph(6)).distinct_count() == 2);
}

TEST_CASE("layer coloring examples") {
  LayersOptions debug;
  debug.debug_checks = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    LayersColoring k = lid_color_layers(complete_graph(n), debug);
    CHECK(verify_lid(complete_graph(n), k.coloring).valid());
  }

  Graph p4 = path_graph(4);
  LayersColoring p = lid_color_layers(p4, debug);
  CHECK(verify_lid(p4, p.coloring).valid());
  CHECK(p.coloring.distinct_count() >= chi_lid_exact(p4).value);
  CHECK(p.accounting.colors_used == p.coloring.distinct_count());

  Graph grid = grid_graph(4);
  LayersColoring gr = lid_color_layers(grid, debug);
  CHECK(verify_lid(grid, gr.coloring).valid());
  CHECK(gr.accounting.colors_used <= gr.accounting.bound);
  CHECK(gr.accounting.c1_palette <= 4);
}

TEST_CASE("layer coloring trace") {
  LayersOptions options;
  options.debug_checks = true;
  options.debug_trace = true;
  Graph g = random_apollonian(14, 4);
  LayersColoring r = lid_color_layers(g, options);
  const std::regex line("case [123] edge [0-9]+ [0-9]+ separator [0-9]+");
  CHECK_FALSE(r.trace.empty());
  for (const auto& text : r.trace) CHECK(std::regex_match(text, line));
  std::size_t distinguishable = 0;
  for (const Edge& e : g.edges()) distinguishable += !are_twins(g, e.u, e.v);
  CHECK(r.trace.size() == distinguishable);
}

TEST_CASE("layer coloring with a certified minor bound") {
  LayersOptions options;
  options.minor_bound = 3;
  LayersColoring t = lid_color_layers(random_tree(12, 9), options);
  CHECK(t.accounting.minor_certified);
  CHECK(t.accounting.slot_bound_ok == true);
  CHECK(t.accounting.max_bondy == 0);

  options.minor_bound = 4;
  LayersColoring k = lid_color_layers(complete_graph(5), options);
  CHECK_FALSE(k.accounting.minor_certified);
}

TEST_CASE("layer coloring on random instances with self-checks") {
  std::mt19937_64 rng(47);
  LayersOptions debug;
  debug.debug_checks = true;
  for (int round = 0; round < 80; ++round) {
    Graph g;
    switch (round % 4) {
      case 0: g = random_tree(2 + rng() % 39, rng()); break;
      case 1: g = random_outerplanar(3 + rng() % 38, rng()); break;
      case 2: g = random_apollonian(3 + rng() % 25, rng()); break;
      default: g = random_gnp(1 + rng() % 14, 0.35, rng()); break;
    }
    LayersColoring r = lid_color_layers(g, debug);
    CHECK(verify_lid(g, r.coloring).valid());
    CHECK(r.accounting.colors_used <= r.accounting.bound);
  }
}

TEST_CASE("layer colorer strategies") {
  Graph g = random_outerplanar(20, 5);
  for (LayerColorer lc : {LayerColorer::brute, LayerColorer::treedepth, LayerColorer::recursive}) {
    for (ProperColorer pc : {ProperColorer::exact, ProperColorer::dsatur}) {
      LayersOptions options;
      options.layer_colorer = lc;
      options.proper_colorer = pc;
      options.debug_checks = true;
      CHECK(verify_lid(g, lid_color_layers(g, options).coloring).valid());
    }
  }
}
