#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "lid/errors.hpp"
#include "lid/generators.hpp"
#include "lid/lid_product.hpp"
#include "lid/oracle.hpp"
#include "lid/verifier.hpp"
#include "oracles.hpp"

using namespace lid;

TEST_CASE("chi_lid_exact examples") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(chi_lid_exact(complete_graph(n)).value == n);
  CHECK(chi_lid_exact(generate_hn(3).graph).value == 5);
  CHECK(chi_lid_exact(path_graph(3)).value == 3);
  CHECK(oracle::brute_chi_lid(path_graph(3)) == 3);
  CHECK(chi_lid_exact(Graph(0)).value == 0);
  CHECK_THROWS_AS(chi_lid_exact(path_graph(13)), capacity_error);

  OracleResult limited = chi_lid_exact(generate_hn(3).graph, 4);
  CHECK(limited.exceeded_limit);
  CHECK(limited.value == 5);
}

TEST_CASE("chi_lid_exact matches brute force and returns valid witnesses") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 1 + rng() % 7;
    Graph g = random_gnp(n, 0.45, rng());
    OracleResult r = chi_lid_exact(g);
    CHECK(r.value == oracle::brute_chi_lid(g));
    CHECK(verify_lid(g, r.witness).valid());
    CHECK(r.witness.distinct_count() == r.value);
    CHECK(r.value >= chi_exact(g).value);
  }
}

TEST_CASE("chi_lid_exact is invariant under relabeling") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 30; ++round) {
    Graph g = random_gnp(9, 0.4, rng());
    std::vector<Vertex> perm(9);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(chi_lid_exact(g).value == chi_lid_exact(oracle::relabel(g, perm)).value);
  }
}

TEST_CASE("trees need at most four colors") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) CHECK(chi_lid_exact(random_tree(12, seed)).value <= 4);
}

TEST_CASE("chi_exact examples") {
  for (std::size_t n = 1; n <= 7; ++n) CHECK(chi_exact(complete_graph(n)).value == n);
  CHECK(chi_exact(cycle_graph(5)).value == 3);
  CHECK(chi_exact(cycle_graph(6)).value == 2);
  CHECK(chi_exact(Graph(5)).value == 1);
  CHECK_THROWS_AS(chi_exact(Graph(41)), capacity_error);

  std::mt19937_64 rng(53);
  for (int round = 0; round < 80; ++round) {
    Graph g = random_gnp(1 + rng() % 9, 0.5, rng());
    OracleResult r = chi_exact(g);
    CHECK(r.value == oracle::brute_chi(g));
    CHECK(is_proper(g, r.witness));
  }
}

TEST_CASE("chi_td_p_exact examples") {
  CHECK(chi_td_p_exact(Graph(4), 3).value == 1);
  CHECK(chi_td_p_exact(path_graph(2), 3).value == 2);
  CHECK(chi_td_p_exact(complete_graph(4), 3).value == 4);
  // alternating two classes induce all of P4 (tree-depth 3), so three are needed
  CHECK(chi_td_p_exact(path_graph(4), 3).value == 3);
  CHECK_THROWS_AS(chi_td_p_exact(path_graph(4), 0), usage_error);
  CHECK_THROWS_AS(chi_td_p_exact(path_graph(11), 3), capacity_error);
}

TEST_CASE("chi_td_p_exact witnesses validate and p = 1 is the chromatic number") {
  std::mt19937_64 rng(54);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + rng() % 7;
    Graph g = random_gnp(n, 0.4, rng());
    OracleResult r = chi_td_p_exact(g, 3);
    LowTdColoring a = LowTdColoring::from_coloring(r.witness);
    CHECK(a.class_count == r.value);
    CHECK(validate_lowtd(g, a));
    CHECK(oracle::is_lowtd(g, a.classes, 3));
    CHECK(chi_td_p_exact(g, 1).value == chi_exact(g).value);
  }
}

TEST_CASE("chi_td_p_exact is minimal") {
  // no assignment with one class fewer passes the independent check
  std::mt19937_64 rng(55);
  for (int round = 0; round < 25; ++round) {
    const std::size_t n = 2 + rng() % 5;
    Graph g = random_gnp(n, 0.5, rng());
    const std::size_t q = chi_td_p_exact(g, 3).value;
    if (q <= 1) continue;
    bool found = false;
    std::vector<std::uint32_t> ids(n, 0);
    std::function<void(std::size_t)> go = [&](std::size_t v) {
      if (found) return;
      if (v == n) {
        found = oracle::is_lowtd(g, ids, 3);
        return;
      }
      for (std::uint32_t c = 0; c < q - 1; ++c) {
        ids[v] = c;
        go(v + 1);
      }
    };
    go(0);
    CHECK_FALSE(found);
  }
}
