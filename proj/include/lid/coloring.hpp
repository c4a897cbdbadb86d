#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lid/vertex_set.hpp"

namespace lid {

using Color = std::uint64_t;

/// Total map vertex -> color id. Color ids are opaque.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}
  Coloring(std::size_t n, Color fill) : colors_(n, fill) {}

  std::size_t size() const { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_[v]; }
  Color& operator[](Vertex v) { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  std::size_t distinct_count() const;
  /// Renames colors to 0, 1, ... in order of first appearance by vertex index.
  Coloring normalized() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

}  // namespace lid
