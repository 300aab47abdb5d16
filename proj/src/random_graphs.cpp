#include "artifact/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace artifact {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

OrientationWord random_orientation(std::mt19937_64& rng, const Graph& g) {
  OrientationWord o = standard_orientation(g);
  std::shuffle(o.word.begin(), o.word.end(), rng);
  o.sign = uniform(rng, 0, 1) ? 1 : -1;
  return o;
}

// Pairs the given half-edges at random, leaving `leaves` of them as leaves.
void pair_up(std::mt19937_64& rng, Graph& g, std::vector<int> free) {
  std::shuffle(free.begin(), free.end(), rng);
  for (std::size_t i = 0; i + 1 < free.size(); i += 2) g.join(free[i], free[i + 1]);
}

}  // namespace

OGraph random_morphism(std::mt19937_64& rng, ObjectPair src, ObjectPair tgt, const RandomGraphOptions& opt) {
  const int L = src.n + src.m + tgt.m;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> labels(L);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    Graph g;
    // some open labels go to degenerates
    std::vector<int> leaf_labels;
    std::vector<int> loose;
    for (int l : labels) {
      if (l > src.n && std::bernoulli_distribution(opt.degenerate_rate)(rng)) loose.push_back(l);
      else leaf_labels.push_back(l);
    }
    for (std::size_t i = 0; i < loose.size(); ++i) {
      if (i + 1 < loose.size() && uniform(rng, 0, 1)) {
        g.degen.push_back({DegenKind::Double, std::min(loose[i], loose[i + 1]), std::max(loose[i], loose[i + 1])});
        ++i;
      } else {
        g.degen.push_back({DegenKind::Single, loose[i], 0});
      }
    }
    if (std::bernoulli_distribution(opt.degenerate_rate / 3)(rng)) g.degen.push_back({DegenKind::Circle, 0, 0});
    std::sort(g.degen.begin(), g.degen.end());

    const int nb = uniform(rng, 0, opt.max_black);
    std::vector<int> slots;
    std::vector<int> unlabeled;
    for (int i = 1; i <= tgt.n; ++i) {
      int v = g.add_vertex(i);
      int k = uniform(rng, 1, opt.max_white_valence);
      for (int j = 0; j < k; ++j) slots.push_back(g.add_half_edge(v));
      if (std::bernoulli_distribution(opt.unlabeled_start_rate)(rng)) {
        unlabeled.push_back(g.start[v]);
        slots.erase(std::find(slots.begin(), slots.end(), g.start[v]));
      }
    }
    for (int b = 0; b < nb; ++b) {
      int v = g.add_vertex(0);
      int k = opt.trivalent ? 3 : uniform(rng, 3, opt.max_black_valence);
      for (int j = 0; j < k; ++j) slots.push_back(g.add_half_edge(v));
    }
    if (static_cast<int>(slots.size()) < static_cast<int>(leaf_labels.size())) continue;
    if ((slots.size() - leaf_labels.size()) % 2) continue;
    std::shuffle(slots.begin(), slots.end(), rng);
    for (std::size_t i = 0; i < leaf_labels.size(); ++i) g.label[slots[i]] = leaf_labels[i];
    pair_up(rng, g, std::vector<int>(slots.begin() + leaf_labels.size(), slots.end()));
    // closed incoming leaves are wrapped by a loop: (x, leaf, x')
    for (int h = 0; h < g.nh(); ++h) {
      if (g.inv[h] != h || g.label[h] == 0 || g.label[h] > src.n) continue;
      int v = g.src[h];
      int x = g.add_half_edge(v), y = g.add_half_edge(v);
      auto& c = g.cyc[v];
      c.pop_back();
      c.pop_back();
      auto it = std::find(c.begin(), c.end(), h);
      it = c.insert(it, x);
      c.insert(it + 2, y);
      g.inv[x] = y;
      g.inv[y] = x;
    }
    try {
      check_morphism(g, src, tgt);
    } catch (const GraphError&) {
      continue;
    }
    OGraph r;
    r.g = std::move(g);
    r.o = random_orientation(rng, r.g);
    return r;
  }
  throw GraphError("random_morphism: no graph found");
}

OGraph random_mp_graph(std::mt19937_64& rng, int half_edges, int max_white) {
  for (;;) {
    Graph g;
    int remaining = half_edges;
    int p = uniform(rng, 0, max_white);
    std::vector<int> all;
    for (int i = 1; i <= p && remaining > 0; ++i) {
      int k = uniform(rng, 1, std::max(1, std::min(4, remaining)));
      int v = g.add_vertex(i);
      for (int j = 0; j < k; ++j) all.push_back(g.add_half_edge(v));
      remaining -= k;
    }
    while (remaining >= 3) {
      int k = uniform(rng, 3, std::min(6, remaining));
      if (remaining - k > 0 && remaining - k < 3) k = remaining;
      int v = g.add_vertex(0);
      for (int j = 0; j < k; ++j) all.push_back(g.add_half_edge(v));
      remaining -= k;
    }
    if (remaining != 0) continue;
    std::shuffle(all.begin(), all.end(), rng);
    int leaves = uniform(rng, 0, static_cast<int>(all.size()));
    if ((all.size() - leaves) % 2) ++leaves;
    if (leaves > static_cast<int>(all.size())) continue;
    std::vector<int> lv(all.begin(), all.begin() + leaves);
    pair_up(rng, g, std::vector<int>(all.begin() + leaves, all.end()));
    int next = 1;
    for (int h : lv) {
      int v = g.src[h];
      bool start = g.is_white(v) && g.start[v] == h;
      if (start && uniform(rng, 0, 2) == 0) continue;
      g.label[h] = next++;
    }
    // relabel randomly
    std::vector<int> perm(next - 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int h = 0; h < g.nh(); ++h)
      if (g.label[h] > 0) g.label[h] = perm[g.label[h] - 1];
    try {
      validate(g, true);
    } catch (const GraphError&) {
      continue;
    }
    OGraph r;
    r.g = std::move(g);
    r.o = random_orientation(rng, r.g);
    return r;
  }
}

}  // namespace artifact
