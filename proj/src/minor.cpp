#include "lid/minor.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "lid/errors.hpp"

namespace lid {

bool is_minor_model(const Graph& g, const Graph& h, const std::vector<VertexSet>& branch_sets) {
  if (branch_sets.size() != h.vertex_count()) return false;
  VertexSet used(g.vertex_count());
  for (const VertexSet& b : branch_sets) {
    if (b.universe() != g.vertex_count() || b.empty()) return false;
    if (b.intersects(used)) return false;
    if (!is_connected(g, b)) return false;
    used |= b;
  }
  for (const Edge& e : h.edges()) {
    if (!open_neighborhood(g, branch_sets[e.u]).intersects(branch_sets[e.v])) return false;
  }
  return true;
}

namespace {

using Adjacency = std::vector<std::uint64_t>;

struct AdjacencyHash {
  std::size_t operator()(const Adjacency& a) const noexcept {
    std::size_t h = a.size();
    for (std::uint64_t w : a) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool has_clique(const Adjacency& adj, std::uint64_t candidates, std::size_t need) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
  while (candidates) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique(adj, candidates & adj[v], need - 1)) return true;
  }
  return false;
}

// Vertices of degree <= 1 never help a K_t model for t >= 3.
Adjacency prune_leaves(Adjacency adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (std::popcount(adj[v]) <= 1) {
        Adjacency next;
        for (std::size_t x = 0; x < adj.size(); ++x) {
          if (x == v) continue;
          std::uint64_t low = adj[x] & ((std::uint64_t{1} << v) - 1);
          std::uint64_t high = (adj[x] >> (v + 1)) << v;
          next.push_back(low | high);
        }
        adj = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return adj;
}

Adjacency contract_edge(const Adjacency& adj, std::size_t a, std::size_t b) {
  // merge b into a, then drop b
  Adjacency merged = adj;
  merged[a] |= merged[b];
  merged[a] &= ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
  for (std::size_t x = 0; x < merged.size(); ++x) {
    if (merged[x] >> b & 1U) merged[x] = (merged[x] & ~(std::uint64_t{1} << b)) | (x == a ? 0 : std::uint64_t{1} << a);
  }
  Adjacency next;
  for (std::size_t x = 0; x < merged.size(); ++x) {
    if (x == b) continue;
    std::uint64_t low = merged[x] & ((std::uint64_t{1} << b) - 1);
    std::uint64_t high = (merged[x] >> (b + 1)) << b;
    next.push_back(low | high);
  }
  return next;
}

bool search(const Adjacency& start, std::size_t t, std::unordered_set<Adjacency, AdjacencyHash>& seen) {
  Adjacency adj = prune_leaves(start);
  if (adj.size() < t) return false;
  std::size_t degree_sum = 0;
  for (std::uint64_t w : adj) degree_sum += static_cast<std::size_t>(std::popcount(w));
  if (degree_sum / 2 < t * (t - 1) / 2) return false;
  if (!seen.insert(adj).second) return false;
  std::uint64_t all = adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1;
  if (has_clique(adj, all, t)) return true;
  for (std::size_t a = 0; a < adj.size(); ++a) {
    std::uint64_t higher = adj[a] & ~((std::uint64_t{2} << a) - 1);
    while (higher) {
      auto b = static_cast<std::size_t>(std::countr_zero(higher));
      higher &= higher - 1;
      if (search(contract_edge(adj, a, b), t, seen)) return true;
    }
  }
  return false;
}

}  // namespace

bool has_clique_minor(const Graph& g, std::size_t t, std::size_t cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 63) {
    throw capacity_error("clique-minor search limited to " + std::to_string(cap) + " vertices, got " +
                         std::to_string(g.vertex_count()));
  }
  if (t == 0) return true;
  if (t == 1) return g.vertex_count() >= 1;
  if (t == 2) return g.edge_count() >= 1;
  Adjacency adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::unordered_set<Adjacency, AdjacencyHash> seen;
  return search(adj, t, seen);
}

}  // namespace lid
