#include "lid/vertex_set.hpp"

#include <ostream>

namespace lid {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
  for (Vertex v : members) bits_.set(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::from_range(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.bits_.set(v);
  return s;
}

Vertex VertexSet::first() const {
  auto pos = bits_.find_first();
  return pos == bits_type::npos ? static_cast<Vertex>(bits_.size()) : static_cast<Vertex>(pos);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace lid
