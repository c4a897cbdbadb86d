#include "lid/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "lid/errors.hpp"
#include "lid/treedepth.hpp"

namespace lid {

namespace {

void require_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw capacity_error(std::string(what) + " is limited to " + std::to_string(cap) + " vertices, got " +
                         std::to_string(g.vertex_count()));
  }
}

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (Vertex y : g.neighbor_list(x)) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return order;
}

class LidSearch {
 public:
  explicit LidSearch(const Graph& g)
      : g_(g), order_(bfs_order(g)), checks_(g.vertex_count()), position_(g.vertex_count()) {
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
    for (const Edge& e : g.edges()) {
      if (are_twins(g, e.u, e.v)) continue;
      std::size_t ready = 0;
      for (Vertex x : closed_neighborhood(g, e.u) | closed_neighborhood(g, e.v)) ready = std::max(ready, position_[x]);
      checks_[ready].push_back(e);
    }
  }

  bool run(std::size_t k) {
    k_ = k;
    colors_.assign(g_.vertex_count(), 0);
    return assign(0, 0);
  }

  Coloring witness() const { return Coloring(std::vector<Color>(colors_.begin(), colors_.end())); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t palette_mask(Vertex v) const {
    std::uint64_t mask = std::uint64_t{1} << colors_[v];
    for (Vertex w : g_.neighbor_list(v)) mask |= std::uint64_t{1} << colors_[w];
    return mask;
  }

  bool assign(std::size_t i, std::size_t used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    const std::size_t top = std::min(k_, used + 1);
    for (std::size_t c = 0; c < top; ++c) {
      ++nodes_;
      bool clash = false;
      for (Vertex w : g_.neighbor_list(v)) {
        if (position_[w] < i && colors_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors_[v] = static_cast<std::uint32_t>(c);
      bool separated = true;
      for (const Edge& e : checks_[i]) {
        if (palette_mask(e.u) == palette_mask(e.v)) {
          separated = false;
          break;
        }
      }
      if (separated && assign(i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Edge>> checks_;  // by position of the last vertex needed
  std::vector<std::size_t> position_;
  std::vector<std::uint32_t> colors_;
  std::size_t k_ = 0;
  std::uint64_t nodes_ = 0;
};

class ProperSearch {
 public:
  explicit ProperSearch(const Graph& g) : g_(g) {}

  bool run(std::size_t k) {
    k_ = k;
    colors_.assign(g_.vertex_count(), uncolored);
    return assign(0, 0);
  }

  Coloring witness() const { return Coloring(std::vector<Color>(colors_.begin(), colors_.end())); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::size_t uncolored = static_cast<std::size_t>(-1);

  // highest saturation, then highest degree, then lowest index
  Vertex pick() const {
    Vertex best = 0;
    std::size_t best_sat = 0;
    std::size_t best_deg = 0;
    bool found = false;
    std::vector<bool> seen;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (colors_[v] != uncolored) continue;
      seen.assign(k_ + 1, false);
      std::size_t sat = 0;
      for (Vertex w : g_.neighbor_list(v)) {
        if (colors_[w] != uncolored && !seen[colors_[w]]) {
          seen[colors_[w]] = true;
          ++sat;
        }
      }
      const std::size_t deg = g_.degree(v);
      if (!found || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
        found = true;
      }
    }
    return best;
  }

  bool assign(std::size_t done, std::size_t used) {
    if (done == g_.vertex_count()) return true;
    const Vertex v = pick();
    const std::size_t top = std::min(k_, used + 1);
    for (std::size_t c = 0; c < top; ++c) {
      ++nodes_;
      bool clash = false;
      for (Vertex w : g_.neighbor_list(v)) {
        if (colors_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors_[v] = c;
      if (assign(done + 1, std::max(used, c + 1))) return true;
      colors_[v] = uncolored;
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::size_t> colors_;
  std::size_t k_ = 0;
  std::uint64_t nodes_ = 0;
};

class LowTdSearch {
 public:
  LowTdSearch(const Graph& g, std::size_t p) : g_(g), p_(p), order_(bfs_order(g)) {}

  bool run(std::size_t q) {
    q_ = q;
    classes_.assign(g_.vertex_count(), 0);
    assigned_ = VertexSet(g_.vertex_count());
    return assign(0, 0);
  }

  Coloring witness() const { return Coloring(std::vector<Color>(classes_.begin(), classes_.end())); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  VertexSet members_of(const std::vector<std::uint32_t>& ids) const {
    VertexSet out(g_.vertex_count());
    for (Vertex v : assigned_)
      if (std::find(ids.begin(), ids.end(), classes_[v]) != ids.end()) out.insert(v);
    return out;
  }

  // Every subset of used classes that contains `c` and has size <= p.
  bool feasible(std::uint32_t c, std::size_t used) const {
    std::vector<std::uint32_t> others;
    for (std::uint32_t x = 0; x < used; ++x)
      if (x != c) others.push_back(x);
    std::vector<std::uint32_t> ids{c};
    return extend(ids, others, 0);
  }

  bool extend(std::vector<std::uint32_t>& ids, const std::vector<std::uint32_t>& others, std::size_t from) const {
    if (!treedepth_at_most(g_, members_of(ids), ids.size())) return false;
    if (ids.size() == p_) return true;
    for (std::size_t i = from; i < others.size(); ++i) {
      ids.push_back(others[i]);
      bool ok = extend(ids, others, i + 1);
      ids.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool assign(std::size_t i, std::size_t used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    const std::size_t top = std::min(q_, used + 1);
    assigned_.insert(v);
    for (std::size_t c = 0; c < top; ++c) {
      ++nodes_;
      classes_[v] = static_cast<std::uint32_t>(c);
      const std::size_t now_used = std::max(used, c + 1);
      if (feasible(static_cast<std::uint32_t>(c), now_used) && assign(i + 1, now_used)) return true;
    }
    assigned_.erase(v);
    return false;
  }

  const Graph& g_;
  std::size_t p_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> classes_;
  VertexSet assigned_;
  std::size_t q_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult chi_lid_exact(const Graph& g, std::optional<std::size_t> max_colors, std::size_t cap) {
  require_cap(g, std::min<std::size_t>(cap, 63), "exact lid-chromatic search");
  const std::size_t limit = max_colors.value_or(g.vertex_count());
  OracleResult out;
  if (g.vertex_count() == 0) return out;
  LidSearch search(g);
  for (std::size_t k = 1; k <= std::min<std::size_t>(limit, 63); ++k) {
    if (search.run(k)) {
      out.value = k;
      out.witness = search.witness();
      out.nodes_explored = search.nodes();
      return out;
    }
  }
  out.value = limit + 1;
  out.exceeded_limit = true;
  out.nodes_explored = search.nodes();
  return out;
}

OracleResult chi_exact(const Graph& g, std::size_t cap) {
  require_cap(g, cap, "exact chromatic number");
  OracleResult out;
  if (g.vertex_count() == 0) return out;
  ProperSearch search(g);
  for (std::size_t k = 1;; ++k) {
    if (search.run(k)) {
      out.value = k;
      out.witness = search.witness();
      out.nodes_explored = search.nodes();
      return out;
    }
  }
}

OracleResult chi_td_p_exact(const Graph& g, std::size_t p, std::size_t cap) {
  if (p == 0) throw usage_error("low tree-depth parameter p must be at least 1");
  require_cap(g, cap, "exact low tree-depth coloring");
  OracleResult out;
  if (g.vertex_count() == 0) return out;
  LowTdSearch search(g, p);
  for (std::size_t q = 1;; ++q) {
    if (search.run(q)) {
      out.value = q;
      out.witness = search.witness();
      out.nodes_explored = search.nodes();
      return out;
    }
  }
}

}  // namespace lid
