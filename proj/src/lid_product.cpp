#include "lid/lid_product.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "lid/errors.hpp"
#include "lid/lid_treedepth.hpp"
#include "lid/treedepth.hpp"

namespace lid {

LowTdColoring LowTdColoring::from_coloring(const Coloring& c) {
  Coloring dense = c.normalized();
  LowTdColoring out;
  out.classes.reserve(dense.size());
  for (Color col : dense.colors()) out.classes.push_back(static_cast<std::uint32_t>(col));
  out.class_count = c.distinct_count();
  return out;
}

namespace {

VertexSet union_of(const Graph& g, const LowTdColoring& a, const std::vector<std::uint32_t>& ids) {
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (std::find(ids.begin(), ids.end(), a.classes[v]) != ids.end()) out.insert(v);
  return out;
}

// Calls f(ids) for every subset of {0..q-1} of size `size`, lexicographically.
template <typename F>
bool for_each_subset(std::size_t q, std::size_t size, F&& f) {
  std::vector<std::uint32_t> ids(size);
  for (std::size_t i = 0; i < size; ++i) ids[i] = static_cast<std::uint32_t>(i);
  if (size > q) return true;
  for (;;) {
    if (!f(ids)) return false;
    std::size_t i = size;
    while (i > 0 && ids[i - 1] == q - size + i - 1) --i;
    if (i == 0) return true;
    ++ids[i - 1];
    for (std::size_t j = i; j < size; ++j) ids[j] = ids[j - 1] + 1;
  }
}

}  // namespace

bool validate_lowtd(const Graph& g, const LowTdColoring& a, std::size_t p, std::size_t limit) {
  if (a.classes.size() != g.vertex_count()) throw usage_error("class assignment does not cover the graph");
  for (std::uint32_t id : a.classes)
    if (id >= a.class_count) throw usage_error("class id out of range");

  for (std::size_t size = 1; size <= std::min(p, a.class_count); ++size) {
    bool ok = for_each_subset(a.class_count, size, [&](const std::vector<std::uint32_t>& ids) {
      VertexSet members = union_of(g, a, ids);
      return treedepth_exact(induced(g, members).graph, limit).depth <= size;
    });
    if (!ok) return false;
  }
  return true;
}

std::size_t product_color_bound(std::size_t q) {
  if (q < 3) return 6;
  const std::size_t triples = q * (q - 1) * (q - 2) / 6;
  std::size_t out = 1;
  for (std::size_t i = 0; i < triples; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / 6) return std::numeric_limits<std::size_t>::max();
    out *= 6;
  }
  return out;
}

ProductColoring lid_color_product(const Graph& g, const LowTdColoring& a, std::size_t limit) {
  if (!validate_lowtd(g, a, 3, limit)) throw usage_error("class assignment is not a low tree-depth coloring for p = 3");

  ProductColoring out;
  out.class_count = std::max<std::size_t>(a.class_count, 3);
  for_each_subset(out.class_count, 3, [&](const std::vector<std::uint32_t>& ids) {
    out.triples.push_back({ids[0], ids[1], ids[2]});
    return true;
  });

  out.tuples.assign(g.vertex_count(), std::vector<std::uint8_t>(out.triples.size(), 0));
  for (std::size_t k = 0; k < out.triples.size(); ++k) {
    const auto& t = out.triples[k];
    VertexSet members = union_of(g, a, {t[0], t[1], t[2]});
    if (members.empty()) continue;
    InducedSubgraph h = induced(g, members);
    Coloring local = lid_color_td(h.graph, treedepth_exact(h.graph, limit).witness);
    if (local.distinct_count() > 5) throw internal_error("triple coloring uses more than five colors");
    for (Vertex i = 0; i < h.to_parent.size(); ++i) {
      out.tuples[h.to_parent[i]][k] = static_cast<std::uint8_t>(local[i] + 1);
    }
  }

  std::map<std::vector<std::uint8_t>, Color> rank;
  for (const auto& tuple : out.tuples) rank.emplace(tuple, 0);
  Color next = 0;
  for (auto& [tuple, id] : rank) id = next++;
  std::vector<Color> colors;
  colors.reserve(g.vertex_count());
  for (const auto& tuple : out.tuples) colors.push_back(rank.at(tuple));
  out.coloring = Coloring(std::move(colors));
  return out;
}

}  // namespace lid
