#include "lid/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

#include "lid/errors.hpp"

namespace lid {

EliminationForest::EliminationForest(std::vector<std::optional<Vertex>> parent)
    : parent_(std::move(parent)), depth_(parent_.size(), 0) {
  const std::size_t n = parent_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (parent_[v] && *parent_[v] >= n) {
      throw usage_error("parent of " + std::to_string(v) + " is out of range");
    }
  }
  std::vector<Vertex> chain;
  for (Vertex v = 0; v < n; ++v) {
    // Walk up until a vertex with known depth; a walk longer than n is a cycle.
    chain.clear();
    Vertex x = v;
    while (depth_[x] == 0) {
      chain.push_back(x);
      if (chain.size() > n) throw usage_error("parent map contains a cycle through vertex " + std::to_string(v));
      if (!parent_[x]) break;
      x = *parent_[x];
    }
    std::size_t d = depth_[x];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth_[*it] = ++d;
  }
  height_ = n == 0 ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

std::vector<Vertex> EliminationForest::roots() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v)
    if (!parent_[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> EliminationForest::children() const {
  std::vector<std::vector<Vertex>> out(size());
  for (Vertex v = 0; v < size(); ++v)
    if (parent_[v]) out[*parent_[v]].push_back(v);
  return out;
}

VertexSet EliminationForest::ancestors(Vertex v) const {
  VertexSet out(size());
  for (auto p = parent_[v]; p; p = parent_[*p]) out.insert(*p);
  return out;
}

VertexSet EliminationForest::subtree(Vertex v) const {
  VertexSet out(size());
  for (Vertex x = 0; x < size(); ++x)
    if (x == v || is_ancestor(v, x)) out.insert(x);
  return out;
}

bool EliminationForest::is_ancestor(Vertex x, Vertex y) const {
  if (depth_[x] >= depth_[y]) return false;
  for (auto p = parent_[y]; p; p = parent_[*p])
    if (*p == x) return true;
  return false;
}

bool EliminationForest::is_path() const {
  if (roots().size() != 1) return false;
  for (const auto& ch : children())
    if (ch.size() > 1) return false;
  return true;
}

Graph closure(const EliminationForest& t) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < t.size(); ++v)
    for (auto p = t.parent(v); p; p = t.parent(*p)) edges.push_back({std::min(*p, v), std::max(*p, v)});
  return Graph(t.size(), edges);
}

bool validate_witness(const Graph& g, const EliminationForest& t) {
  if (g.vertex_count() != t.size()) {
    throw usage_error("forest has " + std::to_string(t.size()) + " vertices, graph has " +
                      std::to_string(g.vertex_count()));
  }
  for (const Edge& e : g.edges()) {
    if (!t.is_ancestor(e.u, e.v) && !t.is_ancestor(e.v, e.u)) return false;
  }
  return true;
}

EliminationForest restrict_forest(const EliminationForest& t, const VertexSet& s) {
  std::vector<Vertex> members = s.to_vector();
  std::vector<Vertex> local(t.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
  std::vector<std::optional<Vertex>> parent(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto p = t.parent(members[i]); p; p = t.parent(*p)) {
      if (s.contains(*p)) {
        parent[i] = local[*p];
        break;
      }
    }
  }
  return EliminationForest(std::move(parent));
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class SubsetSolver {
 public:
  explicit SubsetSolver(const Graph& g) : adj_(g.vertex_count(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
    }
  }

  std::vector<Mask> components(Mask s) const {
    std::vector<Mask> out;
    while (s) {
      Mask comp = s & -s;
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

  std::size_t solve(Mask s) {
    std::size_t best = 0;
    for (Mask comp : components(s)) best = std::max(best, solve_connected(comp));
    return best;
  }

  void build(Mask s, std::optional<Vertex> parent, std::vector<std::optional<Vertex>>& out) {
    for (Mask comp : components(s)) {
      Vertex root = static_cast<Vertex>(std::countr_zero(comp));
      if (std::popcount(comp) > 1) {
        solve_connected(comp);
        root = memo_.at(comp).root;
      }
      out[root] = parent;
      build(comp & ~bit(root), root, out);
    }
  }

 private:
  struct Entry {
    std::size_t depth;
    Vertex root;
  };

  std::size_t solve_connected(Mask s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= 1) return size;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.depth;

    Entry best{size + 1, 0};
    for (Mask rest = s; rest; rest &= rest - 1) {
      if (best.depth == 2) break;  // no connected graph on >= 2 vertices does better
      auto v = static_cast<Vertex>(std::countr_zero(rest));
      std::vector<Mask> comps = components(s & ~bit(v));
      std::sort(comps.begin(), comps.end(), [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
      std::size_t worst = 0;
      for (Mask c : comps) {
        worst = std::max(worst, solve_connected(c));
        if (worst + 1 >= best.depth) break;
      }
      if (worst + 1 < best.depth) best = {worst + 1, v};
    }
    memo_.emplace(s, best);
    return best.depth;
  }

  std::vector<Mask> adj_;
  std::unordered_map<Mask, Entry> memo_;
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit || n > 63) {
    throw capacity_error("exact tree-depth is limited to " + std::to_string(std::min<std::size_t>(limit, 63)) +
                         " vertices, got " + std::to_string(n));
  }
  SubsetSolver solver(g);
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  TreedepthResult out;
  out.depth = solver.solve(all);
  std::vector<std::optional<Vertex>> parent(n);
  solver.build(all, std::nullopt, parent);
  out.witness = EliminationForest(std::move(parent));
  if (out.witness.height() != out.depth || !validate_witness(g, out.witness)) {
    throw internal_error("tree-depth witness does not match the computed depth");
  }
  return out;
}

bool treedepth_at_most(const Graph& g, const VertexSet& within, std::size_t k) {
  if (within.empty()) return true;
  if (k == 0) return false;
  for (const VertexSet& comp : connected_components(g, within)) {
    if (comp.count() <= 1) continue;
    if (k == 1) return false;
    bool ok = false;
    for (Vertex v : comp) {
      VertexSet rest = comp;
      rest.erase(v);
      if (treedepth_at_most(g, rest, k - 1)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

EliminationForest dfs_forest(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    stack.push_back({r, 0});
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const auto& nb = g.neighbor_list(x);
      if (next == nb.size()) {
        stack.pop_back();
        continue;
      }
      Vertex y = nb[next++];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = x;
        stack.push_back({y, 0});
      }
    }
  }
  return EliminationForest(std::move(parent));
}

EliminationForest heuristic_forest(const Graph& g, std::size_t balanced_limit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Vertex>> parent(n);

  std::function<void(const VertexSet&, std::optional<Vertex>)> split = [&](const VertexSet& s,
                                                                            std::optional<Vertex> above) {
    for (const VertexSet& comp : connected_components(g, s)) {
      if (comp.count() > balanced_limit) {
        // DFS tree of this component, hung below `above`
        std::vector<Vertex> members = comp.to_vector();
        EliminationForest sub = dfs_forest(induced(g, comp).graph);
        for (Vertex i = 0; i < members.size(); ++i) {
          auto p = sub.parent(i);
          parent[members[i]] = p ? std::optional<Vertex>(members[*p]) : above;
        }
        continue;
      }
      Vertex best = comp.first();
      std::size_t best_size = comp.count() + 1;
      for (Vertex v : comp) {
        VertexSet rest = comp;
        rest.erase(v);
        std::size_t largest = 0;
        for (const VertexSet& c : connected_components(g, rest)) largest = std::max(largest, c.count());
        if (largest < best_size) {
          best_size = largest;
          best = v;
        }
      }
      parent[best] = above;
      VertexSet rest = comp;
      rest.erase(best);
      split(rest, best);
    }
  };
  split(g.all_vertices(), std::nullopt);
  return EliminationForest(std::move(parent));
}

}  // namespace lid
