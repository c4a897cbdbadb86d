#include "lid/generators.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <string>

#include "lid/errors.hpp"

namespace lid {

HnGadget generate_hn(std::size_t n) {
  if (n < 2) throw usage_error("H_n needs n >= 2, got " + std::to_string(n));
  HnGadget out;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    out.a.push_back(i);
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  for (Vertex i = 0; i + 1 < n; ++i) {
    auto b = static_cast<Vertex>(n + i);
    out.b.push_back(b);
    edges.push_back({i, b});
  }
  out.graph = Graph(2 * n - 1, edges);
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw usage_error("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, edges);
}

Graph grid_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      auto v = static_cast<Vertex>(r * k + c);
      if (c + 1 < k) edges.push_back({v, v + 1});
      if (r + 1 < k) edges.push_back({v, static_cast<Vertex>(v + k)});
    }
  }
  return Graph(k * k, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::vector<Edge> edges;
  for (Vertex x : prufer) {
    for (Vertex leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  edges.push_back({rest[0], rest[1]});
  return Graph(n, edges);
}

Graph random_outerplanar(std::size_t n, std::uint64_t seed) {
  if (n < 3) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  // Triangulate the polygon lo..hi whose side (lo, hi) is already present.
  std::function<void(Vertex, Vertex)> split = [&](Vertex lo, Vertex hi) {
    if (hi - lo < 2) return;
    std::uniform_int_distribution<Vertex> pick(lo + 1, hi - 1);
    Vertex apex = pick(rng);
    if (apex - lo >= 2) edges.push_back({lo, apex});
    if (hi - apex >= 2) edges.push_back({apex, hi});
    split(lo, apex);
    split(apex, hi);
  };
  split(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph random_apollonian(std::size_t n, std::uint64_t seed) {
  if (n < 3) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    std::size_t f = pick(rng);
    auto [x, y, z] = faces[f];
    edges.push_back({x, v});
    edges.push_back({y, v});
    edges.push_back({z, v});
    faces[f] = {x, y, v};
    faces.push_back({y, z, v});
    faces.push_back({x, z, v});
  }
  return Graph(n, edges);
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

}  // namespace lid
