#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lid/vertex_set.hpp"

namespace lid {

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Duplicate edges are merged. Self-loops and out-of-range endpoints throw usage_error.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return open_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const;
  const std::vector<Vertex>& neighbor_list(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbor_list(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.open_ == b.open_; }

 private:
  std::vector<VertexSet> open_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t edge_count_ = 0;
};

/// N[v].
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N[X].
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
/// N(X) = N[X] \ X.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);

/// N[u] == N[v]. Throws usage_error when u == v.
bool are_twins(const Graph& g, Vertex u, Vertex v);
/// N[u] xor N[v]. Throws usage_error when u == v.
VertexSet distinguishers(const Graph& g, Vertex u, Vertex v);

/// Components of g[within], ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);

/// g[s] with dense reindexing. to_parent is ascending.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  std::optional<Vertex> local(Vertex parent) const;
};

InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Result of merging a connected vertex set into one vertex.
struct Contraction {
  Graph graph;
  std::vector<Vertex> to_new;  // old index -> new index; merged members share one
  Vertex merged;
};

/// Replaces s (must induce a connected subgraph) by a single vertex adjacent to N(s).
/// The merged vertex takes the slot of min(s); other indices shift down densely.
Contraction contract(const Graph& g, const VertexSet& s);

struct LayerDecomposition {
  Vertex root;
  std::vector<VertexSet> layers;              // layers[i] = vertices at distance i
  std::vector<InducedSubgraph> layer_graphs;  // g[layers[i]]
  std::vector<std::size_t> layer_of;          // per vertex of g
};

/// BFS distance classes from u. Throws usage_error naming an unreachable vertex
/// if g is disconnected.
LayerDecomposition bfs_layers(const Graph& g, Vertex u);

}  // namespace lid
