#pragma once

#include <map>

#include "artifact/categories.hpp"
#include "artifact/chain.hpp"

namespace artifact {

// A Sullivan diagram is represented by the smallest key among the
// all-trivalent graphs related to it by flips (collapse of a black-black edge
// followed by the other resolution of the resulting 4-valent vertex).
struct SullivanClass {
  Key rep;
  int sign = 1;  // class of the input key = sign * class of rep
  bool is_zero = false;
  int orbit_size = 0;
};

bool all_black_trivalent(const Graph& g);

// Contracts every black-black non-loop edge. Signs are dropped: this is the
// shape of the diagram, used for display and for the degree count.
Graph sullivan_form(const Graph& g);
// Edges on the admissible cycles minus the number of admissible cycles.
int sullivan_degree(const Graph& g);

class SullivanQuotient {
 public:
  // key must be the canonical key of an all-trivalent graph
  const SullivanClass& classify(const Key& k);

  // Drops terms with a black vertex of valence >= 4 and rewrites the rest in
  // terms of flip-orbit representatives.
  GraphChain project(const GraphChain& c);
  GraphChain differential(const GraphChain& c);
  GraphChain compose(const GraphChain& g1, const GraphChain& g2, ObjectPair a, ObjectPair b, ObjectPair c,
                     int twist_d = 0);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::map<Key, SullivanClass> cache_;
};

}  // namespace artifact
