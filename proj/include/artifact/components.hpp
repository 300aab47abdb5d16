#pragma once

#include <map>
#include <vector>

#include "artifact/categories.hpp"
#include "artifact/homology.hpp"
#include "artifact/sullivan.hpp"

namespace artifact {

// A connected generator of genus g: each closed incoming leaf alone on its
// boundary cycle, all open leaves (incoming, then outgoing) on one further
// cycle, white vertices as the remaining boundaries. Throws GraphError when
// no such surface exists.
OGraph component_seed(ObjectPair src, ObjectPair tgt, int genus);

// Repeatedly blows up black vertices of valence >= 4.
OGraph trivalent_resolution(const OGraph& g);

struct Component {
  Category cat = Category::OC;  // OC or SD
  ObjectPair source, target;
  TopologicalType type;
  std::map<int, std::vector<Key>> basis;  // by degree
  std::size_t graphs_visited = 0;
};

// Closure of the seed's class under collapses, blow-ups and moving an
// unlabeled start leaf. For SD the basis consists of flip-orbit
// representatives. Throws ResourceError when a graph exceeds the bound.
Component enumerate_component(const OGraph& seed, Category cat, ObjectPair src, ObjectPair tgt, int max_half_edges,
                              SullivanQuotient& sq);

// Degrees are shifted by -d * chi(G, out), constant on a component.
HomologyResult component_homology(const Component& c, Ring r, SullivanQuotient& sq, int twist_d = 0);

}  // namespace artifact
