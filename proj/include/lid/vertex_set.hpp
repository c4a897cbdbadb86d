#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace lid {

using Vertex = std::uint32_t;

/// Subset of {0..universe-1}. Set algebra is bitwise; iteration is ascending.
class VertexSet {
  using bits_type = boost::dynamic_bitset<std::uint64_t>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const bits_type* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const bits_type* bits_ = nullptr;
    std::size_t pos_ = bits_type::npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet full(std::size_t universe);
  static VertexSet from_range(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

  void insert(Vertex v) { bits_.set(v); }
  void erase(Vertex v) { bits_.reset(v); }

  /// Smallest member; universe() if empty.
  Vertex first() const;

  bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

  VertexSet& operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    bits_ -= o.bits_;
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.bits_ < b.bits_; }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, bits_type::npos}; }

  std::vector<Vertex> to_vector() const;

 private:
  bits_type bits_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace lid
