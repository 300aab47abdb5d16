#pragma once

#include <functional>
#include <map>
#include <set>

#include "artifact/graph.hpp"

namespace artifact {

struct RawEnumOptions {
  int half_edges = 0;       // exact number of half-edges
  int max_white = 1 << 20;  // bound on white vertices
  bool connected = false;
  bool black_trivalent = false;
  // When false, one labeling per orbit of the label permutation action is
  // produced (labels follow half-edge ids); white labels follow vertex order.
  bool all_labelings = true;
};

// Calls f on every (m/p)-graph with the given number of half-edges, up to
// relabeling of vertex and half-edge ids (with repetitions across isomorphic
// graphs). Leaf labels run over all bijections with {1..m}.
void for_each_raw_graph(const RawEnumOptions& opt, const std::function<void(const Graph&)>& f);

// Canonical classes (ignoring orientation) of all (m/p)-graphs with at most
// max_half_edges half-edges.
std::vector<Key> all_graph_classes(int max_half_edges, int max_white = 1 << 20, bool connected = false,
                                   bool all_labelings = true);

}  // namespace artifact
