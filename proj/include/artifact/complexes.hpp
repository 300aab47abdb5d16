#pragma once

#include <functional>
#include <vector>

#include "artifact/chain.hpp"
#include "artifact/graph.hpp"

namespace artifact {

// Collapse of the edge containing half-edge h. One term per placement of the
// start half-edge when a white start is collapsed.
std::vector<OGraph> collapse_terms(const OGraph& og, int h);
GraphChain collapse(const OGraph& og, int h, Ring r = {});

struct BlowUp {
  OGraph graph;
  int edge = -1;  // half-edge of the new edge at the vertex keeping the old id
};

std::vector<BlowUp> blow_ups(const OGraph& og);
// Streams blow-ups through a reused buffer; the OGraph passed to f is only
// valid during the call.
void for_each_blow_up(const OGraph& og, const std::function<void(const OGraph&, int)>& f);
bool needs_floor(const Graph& g);

// Removes unlabeled non-start leaves at trivalent black vertices. Returns
// false when the result is zero.
bool floor_reduce(OGraph& og);
GraphChain floor_chain(const OGraph& og, Ring r = {});

// d(G) for a single oriented graph, and its linear extension.
GraphChain differential(const OGraph& og, Ring r = {});
GraphChain differential(const GraphChain& c);

// Joins the far ends of two half-edges that are about to be deleted.
// Handles loops (circle), leaves (label transfer) and degenerate results.
void splice(Graph& g, int h1, int h2);

}  // namespace artifact
