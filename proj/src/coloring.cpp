#include "lid/coloring.hpp"

#include <algorithm>
#include <unordered_map>

namespace lid {

std::size_t Coloring::distinct_count() const {
  std::vector<Color> sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Coloring Coloring::normalized() const {
  std::unordered_map<Color, Color> rename;
  std::vector<Color> out;
  out.reserve(colors_.size());
  for (Color c : colors_) {
    auto [it, fresh] = rename.try_emplace(c, rename.size());
    out.push_back(it->second);
  }
  return Coloring(std::move(out));
}

}  // namespace lid
