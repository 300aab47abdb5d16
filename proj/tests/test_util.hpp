#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "artifact/graph.hpp"

namespace testutil {

using namespace artifact;

// Same oriented graph with vertex and half-edge ids permuted.
inline OGraph relabel(const OGraph& og, std::mt19937_64& rng) {
  const Graph& g = og.g;
  std::vector<int> pv(g.nv()), ph(g.nh());
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(ph.begin(), ph.end(), 0);
  std::shuffle(pv.begin(), pv.end(), rng);
  std::shuffle(ph.begin(), ph.end(), rng);
  Graph r;
  r.cyc.resize(g.nv());
  r.white.resize(g.nv());
  r.start.resize(g.nv());
  r.src.resize(g.nh());
  r.inv.resize(g.nh());
  r.label.resize(g.nh());
  r.degen = g.degen;
  for (int v = 0; v < g.nv(); ++v) {
    for (int h : g.cyc[v]) r.cyc[pv[v]].push_back(ph[h]);
    // rotate the cyclic order too
    auto& c = r.cyc[pv[v]];
    if (!c.empty()) std::rotate(c.begin(), c.begin() + rng() % c.size(), c.end());
    r.white[pv[v]] = g.white[v];
    r.start[pv[v]] = g.start[v] < 0 ? -1 : ph[g.start[v]];
  }
  for (int h = 0; h < g.nh(); ++h) {
    r.src[ph[h]] = pv[g.src[h]];
    r.inv[ph[h]] = ph[g.inv[h]];
    r.label[ph[h]] = g.label[h];
  }
  OGraph out{r, og.o};
  for (int& t : out.o.word) t = tok_is_vertex(t) ? vtok(pv[tok_id(t)]) : htok(ph[tok_id(t)]);
  return out;
}

// Parity of a word against its sorted order, by counting inversions.
inline int inversion_sign(const std::vector<int>& w) {
  long long inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// A single black vertex with the given leaf labels in cyclic order.
inline OGraph black_corolla(const std::vector<int>& labels) {
  OGraph og;
  int v = og.g.add_vertex();
  for (int l : labels) og.g.add_half_edge(v, l);
  og.o = standard_orientation(og.g);
  return og;
}

}  // namespace testutil
