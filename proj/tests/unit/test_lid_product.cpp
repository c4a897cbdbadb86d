#include <doctest.h>

#include <random>

#include "lid/errors.hpp"
#include "lid/generators.hpp"
#include "lid/lid_product.hpp"
#include "lid/oracle.hpp"
#include "lid/verifier.hpp"
#include "oracles.hpp"

using namespace lid;

namespace {

LowTdColoring classes(std::vector<std::uint32_t> ids, std::size_t q) { return LowTdColoring{std::move(ids), q}; }

}  // namespace

TEST_CASE("validate_lowtd examples") {
  CHECK(validate_lowtd(Graph(4), classes({0, 0, 0, 0}, 1)));
  CHECK(validate_lowtd(complete_graph(3), classes({0, 1, 2}, 3)));
  CHECK_FALSE(validate_lowtd(complete_graph(4), classes({0, 1, 2, 2}, 3)));
  // alternating P4: the two classes together induce P4, tree-depth 3
  CHECK_FALSE(validate_lowtd(path_graph(4), classes({0, 1, 0, 1}, 2)));
  CHECK_THROWS_AS(validate_lowtd(path_graph(3), classes({0, 1}, 2)), usage_error);
}

TEST_CASE("validate_lowtd agrees with forest enumeration") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 1 + rng() % 7;
    Graph g = random_gnp(n, 0.4, rng());
    const std::size_t q = 1 + rng() % 4;
    std::vector<std::uint32_t> ids(n);
    for (auto& x : ids) x = static_cast<std::uint32_t>(rng() % q);
    LowTdColoring a = LowTdColoring::from_coloring(Coloring(std::vector<Color>(ids.begin(), ids.end())));
    CHECK(validate_lowtd(g, a) == oracle::is_lowtd(g, a.classes, 3));
  }
}

TEST_CASE("product color bound") {
  CHECK(product_color_bound(1) == 6);
  CHECK(product_color_bound(2) == 6);
  CHECK(product_color_bound(3) == 6);
  CHECK(product_color_bound(4) == 1296);
  CHECK(product_color_bound(40) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("product coloring examples") {
  ProductColoring stable = lid_color_product(Graph(4), classes({0, 0, 0, 0}, 1));
  CHECK(stable.coloring.distinct_count() == 1);
  CHECK(stable.triples.size() == 1);

  // td(P4) = 3, so one class per vertex is not needed: three classes, one triple
  Graph p4 = path_graph(4);
  ProductColoring p = lid_color_product(p4, classes({0, 1, 2, 0}, 3));
  CHECK(p.triples.size() == 1);
  CHECK(verify_lid(p4, p.coloring).valid());
  CHECK(p.coloring.distinct_count() <= 5);
  for (const auto& tuple : p.tuples) CHECK(tuple[0] != 0);

  // star K_{1,3}: two classes (center, leaves) are a valid assignment; padded to one triple
  Graph star = star_graph(4);
  ProductColoring s = lid_color_product(star, classes({0, 1, 1, 1}, 2));
  CHECK(s.class_count == 3);
  CHECK(verify_lid(star, s.coloring).valid());
  CHECK(s.coloring.distinct_count() <= 6);

  CHECK_THROWS_AS(lid_color_product(p4, classes({0, 1, 0, 1}, 2)), usage_error);
}

TEST_CASE("product coloring on oracle-computed low tree-depth colorings") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + rng() % 8;
    Graph g = random_gnp(n, 0.35, rng());
    OracleResult q = chi_td_p_exact(g, 3);
    LowTdColoring a = LowTdColoring::from_coloring(q.witness);
    ProductColoring r = lid_color_product(g, a);
    CHECK(verify_lid(g, r.coloring).valid());
    CHECK(r.coloring.distinct_count() <= product_color_bound(q.value));
    // tuple entries are 0 exactly outside H_A
    for (Vertex v = 0; v < n; ++v) {
      for (std::size_t k = 0; k < r.triples.size(); ++k) {
        const auto& t = r.triples[k];
        const bool inside = a.classes[v] == t[0] || a.classes[v] == t[1] || a.classes[v] == t[2];
        CHECK((r.tuples[v][k] != 0) == inside);
        CHECK(r.tuples[v][k] <= 5);
      }
    }
  }
}

TEST_CASE("product separation is witnessed by a triple") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 25; ++round) {
    Graph g = random_gnp(2 + rng() % 7, 0.4, rng());
    LowTdColoring a = LowTdColoring::from_coloring(chi_td_p_exact(g, 3).witness);
    ProductColoring r = lid_color_product(g, a);
    for (const Edge& e : g.edges()) {
      if (are_twins(g, e.u, e.v)) continue;
      bool witnessed = false;
      for (std::size_t k = 0; k < r.triples.size() && !witnessed; ++k) {
        std::set<std::uint8_t> pu, pv;
        for (Vertex x : closed_neighborhood(g, e.u)) pu.insert(r.tuples[x][k]);
        for (Vertex x : closed_neighborhood(g, e.v)) pv.insert(r.tuples[x][k]);
        witnessed = pu != pv;
      }
      CHECK(witnessed);
    }
  }
}
