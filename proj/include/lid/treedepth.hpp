#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lid/graph.hpp"

namespace lid {

/// Rooted forest given by a parent map. Height counts vertices on the longest
/// root-to-leaf path (a single root has height 1).
class EliminationForest {
 public:
  EliminationForest() = default;
  /// Throws usage_error on out-of-range parents or a cycle.
  explicit EliminationForest(std::vector<std::optional<Vertex>> parent);

  std::size_t size() const { return parent_.size(); }
  std::optional<Vertex> parent(Vertex v) const { return parent_[v]; }
  const std::vector<std::optional<Vertex>>& parents() const { return parent_; }
  /// 1-based depth of v (roots have depth 1).
  std::size_t depth(Vertex v) const { return depth_[v]; }
  std::size_t height() const { return height_; }

  std::vector<Vertex> roots() const;
  /// Children lists in ascending order.
  std::vector<std::vector<Vertex>> children() const;
  /// Proper ancestors of v.
  VertexSet ancestors(Vertex v) const;
  /// v and all its descendants.
  VertexSet subtree(Vertex v) const;
  /// True when x is a proper ancestor of y.
  bool is_ancestor(Vertex x, Vertex y) const;
  /// Every vertex has at most one child and there is one root.
  bool is_path() const;

  friend bool operator==(const EliminationForest& a, const EliminationForest& b) { return a.parent_ == b.parent_; }

 private:
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::size_t> depth_;
  std::size_t height_ = 0;
};

/// Graph with an edge between every vertex and each of its proper ancestors.
Graph closure(const EliminationForest& t);

/// True iff every edge of g joins a vertex to one of its ancestors in t.
/// Throws usage_error if the vertex counts differ.
bool validate_witness(const Graph& g, const EliminationForest& t);

/// The forest induced on s: each member's parent becomes its nearest proper
/// ancestor inside s. Indices are local to induced(g, s), i.e. ascending order of s.
/// Valid for g[s] whenever t is valid for g.
EliminationForest restrict_forest(const EliminationForest& t, const VertexSet& s);

struct TreedepthResult {
  std::size_t depth = 0;
  EliminationForest witness;
};

/// Exact tree-depth by memoised recursion over vertex subsets:
///   td(S) = max over components, td(connected S) = 1 + min_v td(S \ {v}).
/// Ties pick the smallest vertex as root. Throws capacity_error above `limit`
/// vertices (hard maximum 63).
TreedepthResult treedepth_exact(const Graph& g, std::size_t limit = 20);

/// Decides td(g[within]) <= k by bounded-depth branching (cost ~ n^k).
bool treedepth_at_most(const Graph& g, const VertexSet& within, std::size_t k);

/// DFS forest of g; always a valid witness since undirected DFS has no cross edges.
EliminationForest dfs_forest(const Graph& g);

/// Valid (not necessarily optimal) witness: each component is split at the vertex
/// that minimises its largest remaining component (a centroid on trees). Components
/// larger than `balanced_limit` fall back to a DFS tree.
EliminationForest heuristic_forest(const Graph& g, std::size_t balanced_limit = 512);

}  // namespace lid
