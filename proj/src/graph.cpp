#include "lid/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <string>

#include "lid/errors.hpp"

namespace lid {

Graph::Graph(std::size_t n) : open_(n, VertexSet(n)), lists_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw usage_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") out of range for " + std::to_string(n) + " vertices");
    }
    if (e.u == e.v) throw usage_error("self-loop on vertex " + std::to_string(e.u));
    if (open_[e.u].contains(e.v)) continue;
    open_[e.u].insert(e.v);
    open_[e.v].insert(e.u);
    ++edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v) lists_[v] = open_[v].to_vector();
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw usage_error("vertex " + std::to_string(v) + " out of range for " +
                      std::to_string(vertex_count()) + " vertices");
  }
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return open_[v];
}

const std::vector<Vertex>& Graph::neighbor_list(Vertex v) const {
  check_vertex(v);
  return lists_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return open_[u].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet s = x;
  for (Vertex v : x) s |= g.neighbors(v);
  return s;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  return closed_neighborhood(g, x) - x;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw usage_error("twin test needs two distinct vertices");
  return closed_neighborhood(g, u) == closed_neighborhood(g, v);
}

VertexSet distinguishers(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw usage_error("distinguishers need two distinct vertices");
  return closed_neighborhood(g, u) ^ closed_neighborhood(g, v);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  std::vector<Vertex> stack;
  while (!unseen.empty()) {
    Vertex start = unseen.first();
    VertexSet comp(g.vertex_count());
    comp.insert(start);
    unseen.erase(start);
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbor_list(x)) {
        if (unseen.contains(y)) {
          unseen.erase(y);
          comp.insert(y);
          stack.push_back(y);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.all_vertices());
}

bool is_connected(const Graph& g, const VertexSet& within) {
  return connected_components(g, within).size() <= 1;
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::optional<Vertex> InducedSubgraph::local(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - to_parent.begin());
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[out.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : out.to_parent) {
    for (Vertex v : g.neighbor_list(u)) {
      if (u < v && s.contains(v)) edges.push_back({local[u], local[v]});
    }
  }
  out.graph = Graph(out.to_parent.size(), edges);
  return out;
}

Contraction contract(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw usage_error("cannot contract an empty vertex set");
  for (Vertex v : s) g.check_vertex(v);
  if (!is_connected(g, s)) {
    std::ostringstream msg;
    msg << "contracted set " << s << " is not connected";
    throw usage_error(msg.str());
  }

  const Vertex rep = s.first();
  Contraction out;
  out.to_new.assign(g.vertex_count(), 0);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v) && v != rep) continue;
    out.to_new[v] = next++;
  }
  for (Vertex v : s) out.to_new[v] = out.to_new[rep];
  out.merged = out.to_new[rep];

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.to_new[e.u];
    Vertex b = out.to_new[e.v];
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  out.graph = Graph(next, edges);
  return out;
}

LayerDecomposition bfs_layers(const Graph& g, Vertex u) {
  g.check_vertex(u);
  constexpr std::size_t unreached = static_cast<std::size_t>(-1);
  LayerDecomposition out;
  out.root = u;
  out.layer_of.assign(g.vertex_count(), unreached);
  out.layer_of[u] = 0;
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    std::size_t d = out.layer_of[x];
    if (out.layers.size() <= d) out.layers.emplace_back(g.vertex_count());
    out.layers[d].insert(x);
    for (Vertex y : g.neighbor_list(x)) {
      if (out.layer_of[y] == unreached) {
        out.layer_of[y] = d + 1;
        queue.push_back(y);
      }
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (out.layer_of[v] == unreached) {
      throw usage_error("graph is disconnected: vertex " + std::to_string(v) +
                        " is unreachable from " + std::to_string(u));
    }
  }
  out.layer_graphs.reserve(out.layers.size());
  for (const VertexSet& layer : out.layers) out.layer_graphs.push_back(induced(g, layer));
  return out;
}

}  // namespace lid
