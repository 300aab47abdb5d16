#include "artifact/sullivan.hpp"

#include <deque>

#include "artifact/complexes.hpp"

namespace artifact {

bool all_black_trivalent(const Graph& g) {
  for (int v = 0; v < g.nv(); ++v)
    if (!g.is_white(v) && g.valence(v) != 3) return false;
  return true;
}

namespace {

bool black_black_edge(const Graph& g, int h) {
  int y = g.inv[h];
  return y != h && !g.is_white(g.src[h]) && !g.is_white(g.src[y]) && g.src[h] != g.src[y];
}

// Both resolutions of the 4-valent vertex created by collapsing h, as
// canonical classes with the signs they carry in d of the collapsed graph.
std::vector<CanonicalClass> flip_pair(const OGraph& t, int h) {
  OGraph c = collapse_terms(t, h).at(0);
  int v4 = -1;
  for (int v = 0; v < c.g.nv(); ++v)
    if (!c.g.is_white(v) && c.g.valence(v) == 4) v4 = v;
  std::vector<CanonicalClass> out;
  for_each_blow_up(c, [&](const OGraph& x, int e) {
    if (x.g.src[e] == v4) out.push_back(canonical_form(x));
  });
  if (out.size() != 2) throw GraphError("flip: expected two resolutions");
  return out;
}

}  // namespace

const SullivanClass& SullivanQuotient::classify(const Key& k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;

  // signs relative to k; a contradiction kills the orbit
  std::map<Key, int> sign{{k, 1}};
  std::deque<Key> todo{k};
  bool zero = false;
  while (!todo.empty()) {
    Key cur = todo.front();
    todo.pop_front();
    OGraph t = GraphChain::graph_of(cur);
    if (canonical_form(t).is_zero) zero = true;
    for (int h = 0; h < t.g.nh(); ++h) {
      if (!black_black_edge(t.g, h) || h > t.g.inv[h]) continue;
      auto pr = flip_pair(t, h);
      if (pr[0].is_zero || pr[1].is_zero) {
        zero = true;
        continue;
      }
      // s0 [K0] + s1 [K1] = 0
      int i = pr[0].key == cur ? 0 : 1;
      if (pr[i].key != cur) throw GraphError("flip: graph is not among its own resolutions");
      const auto& other = pr[1 - i];
      if (other.key == cur) {
        if (pr[0].sign == pr[1].sign) zero = true;
        continue;
      }
      int s = -sign[cur] * pr[i].sign * other.sign;
      auto [pos, fresh] = sign.emplace(other.key, s);
      if (fresh) todo.push_back(other.key);
      else if (pos->second != s) zero = true;
    }
  }
  const Key& rep = sign.begin()->first;
  int rs = sign.begin()->second;
  for (const auto& [key, s] : sign) cache_[key] = SullivanClass{rep, s * rs, zero, static_cast<int>(sign.size())};
  return cache_.at(k);
}

GraphChain SullivanQuotient::project(const GraphChain& c) {
  GraphChain out(c.ring());
  for (const auto& [k, x] : c.terms()) {
    Graph g = decode(k);
    if (!all_black_trivalent(g)) continue;
    const SullivanClass& sc = classify(k);
    if (!sc.is_zero) out.add(sc.rep, x * sc.sign);
  }
  return out;
}

GraphChain SullivanQuotient::differential(const GraphChain& c) { return project(artifact::differential(project(c))); }

GraphChain SullivanQuotient::compose(const GraphChain& g1, const GraphChain& g2, ObjectPair a, ObjectPair b,
                                     ObjectPair c, int twist_d) {
  return project(artifact::compose(project(g1), project(g2), a, b, c, twist_d));
}

Graph sullivan_form(const Graph& g) {
  Graph t = g;
  for (;;) {
    int h = -1;
    for (int x = 0; x < t.nh() && h < 0; ++x)
      if (black_black_edge(t, x)) h = x;
    if (h < 0) break;
    OGraph og{t, standard_orientation(t)};
    t = collapse_terms(og, h).at(0).g;
  }
  return canonical_graph(canonical_form(t, standard_orientation(t)));
}

int sullivan_degree(const Graph& g) {
  // each white vertex of valence k is an admissible cycle with k edges
  int admissible = 0, whites = 0;
  for (int v = 0; v < g.nv(); ++v)
    if (g.is_white(v)) {
      admissible += g.valence(v);
      ++whites;
    }
  return admissible - whites;
}

}  // namespace artifact
