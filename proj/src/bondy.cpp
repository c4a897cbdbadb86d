#include "lid/bondy.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "lid/errors.hpp"

namespace lid {

BondyResult bondy_reduce(const SetFamily& family) {
  const auto& members = family.members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].universe() != family.ground_size) {
      throw usage_error("family member " + std::to_string(i) + " has universe " +
                        std::to_string(members[i].universe()) + ", expected " +
                        std::to_string(family.ground_size));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (members[i] == members[j]) {
        throw usage_error("family members " + std::to_string(j) + " and " + std::to_string(i) + " are equal");
      }
    }
  }

  BondyResult out{VertexSet(family.ground_size), {}};
  std::vector<VertexSet> traces(members.size(), VertexSet(family.ground_size));
  for (;;) {
    bool split = false;
    for (std::size_t i = 0; i < members.size() && !split; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (traces[i] != traces[j]) continue;
        // traces agree on selected, so the difference avoids it
        Vertex x = (members[i] ^ members[j]).first();
        out.selected.insert(x);
        out.added.push_back(x);
        for (std::size_t k = 0; k < members.size(); ++k)
          if (members[k].contains(x)) traces[k].insert(x);
        split = true;
        break;
      }
    }
    if (!split) break;
  }
  if (!members.empty() && out.added.size() + 1 > members.size()) {
    throw internal_error("greedy distinguishing set exceeded n-1 elements");
  }
  return out;
}

VertexSet distinguishing_set(const Graph& g, const VertexSet& clique,
                             const std::optional<VertexSet>& ground_restriction) {
  if (clique.universe() != g.vertex_count()) throw usage_error("clique universe does not match graph");
  if (!is_clique(g, clique)) {
    std::ostringstream msg;
    msg << "vertex set " << clique << " is not a clique";
    throw usage_error(msg.str());
  }
  if (ground_restriction && ground_restriction->universe() != g.vertex_count()) {
    throw usage_error("ground restriction universe does not match graph");
  }

  std::vector<VertexSet> neighborhoods;
  for (Vertex v : clique) {
    VertexSet nb = closed_neighborhood(g, v);
    if (std::find(neighborhoods.begin(), neighborhoods.end(), nb) == neighborhoods.end()) {
      neighborhoods.push_back(std::move(nb));
    }
  }

  SetFamily family{g.vertex_count(), {}};
  for (const VertexSet& nb : neighborhoods) {
    VertexSet member = ground_restriction ? (nb & *ground_restriction) : nb;
    if (std::find(family.members.begin(), family.members.end(), member) != family.members.end()) {
      throw usage_error("a non-twin pair of the clique has no distinguisher inside the ground restriction");
    }
    family.members.push_back(std::move(member));
  }
  return bondy_reduce(family).selected;
}

}  // namespace lid
