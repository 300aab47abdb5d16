#include "artifact/components.hpp"

#include <deque>
#include <set>

#include "artifact/complexes.hpp"

namespace artifact {

OGraph component_seed(ObjectPair src, ObjectPair tgt, int genus) {
  if (genus < 0) throw GraphError("negative genus");
  const int m = src.m + tgt.m;
  if (src.n + tgt.n + (m > 0 ? 1 : 0) == 0) throw GraphError("component has no boundary");
  Graph g;
  const bool white_core = tgt.n > 0;
  const int core = g.add_vertex(white_core ? 1 : 0);
  auto leaf = [&](int lab) { g.add_half_edge(core, lab); };
  auto edge = [&](int& other) {
    int h = g.add_half_edge(core);
    other = h;
  };
  std::vector<std::pair<int, int>> pending;  // core half-edges to be joined
  for (int i = 0; i < genus; ++i) {
    int a, b, ai, bi;
    edge(a);
    edge(b);
    edge(ai);
    edge(bi);
    pending.push_back({a, ai});
    pending.push_back({b, bi});
  }
  const int outer_closed = (m == 0 && src.n > 0) ? src.n : 0;
  for (int l = 1; l <= src.n; ++l) {
    if (l == outer_closed) continue;
    int x, y;
    edge(x);
    leaf(l);
    edge(y);
    pending.push_back({x, y});
  }
  if (outer_closed) leaf(outer_closed);
  for (int l = src.n + 1; l <= src.n + m; ++l) leaf(l);
  for (int w = 2; w <= tgt.n; ++w) {
    int t;
    edge(t);
    int v = g.add_vertex(w);
    int s = g.add_half_edge(v);
    pending.push_back({t, s});
  }
  for (auto [a, b] : pending) g.join(a, b);

  if (!white_core && g.valence(core) < 3) {
    // no black vertex fits: the surface is a degenerate graph
    Graph d;
    std::vector<int> labs;
    for (int h = 0; h < g.nh(); ++h)
      if (g.label[h] > 0) labs.push_back(g.label[h]);
    if (genus == 0 && labs.size() == 1) d.degen.push_back({DegenKind::Single, labs[0], 0});
    else if (genus == 0 && labs.size() == 2) d.degen.push_back({DegenKind::Double, labs[0], labs[1]});
    else throw GraphError("no graph of this type");
    check_morphism(d, src, tgt);
    return {d, standard_orientation(d)};
  }
  check_morphism(g, src, tgt);
  return {g, standard_orientation(g)};
}

OGraph trivalent_resolution(const OGraph& g) {
  OGraph cur = g;
  for (;;) {
    int big = -1;
    for (int v = 0; v < cur.g.nv() && big < 0; ++v)
      if (!cur.g.is_white(v) && cur.g.valence(v) > 3) big = v;
    if (big < 0) return cur;
    OGraph next;
    bool found = false;
    for_each_blow_up(cur, [&](const OGraph& x, int e) {
      if (!found && x.g.src[e] == big) {
        next = x;
        found = true;
      }
    });
    cur = next;
  }
}

namespace {

void start_leaf_moves(const OGraph& og, const std::function<void(const OGraph&)>& f) {
  const Graph& g = og.g;
  for (int v = 0; v < g.nv(); ++v) {
    if (!g.is_white(v)) continue;
    const int s = g.start[v];
    const int p = g.position(s);
    const bool bare = g.is_leaf(s) && g.label[s] == 0;
    for (int after = 0; after < 2 && !bare; ++after) {
      OGraph x = og;
      int u = x.g.nh();
      x.g.src.push_back(v);
      x.g.inv.push_back(u);
      x.g.label.push_back(0);
      auto& c = x.g.cyc[v];
      c.insert(c.begin() + p + after, u);
      x.g.start[v] = u;
      x.o.word.push_back(htok(u));
      f(x);
    }
    if (bare && g.valence(v) > 1) {
      for (int ns : {g.next(s), g.prev(s)}) {
        OGraph x = og;
        x.g.start[v] = ns;
        x.g.cyc[v].erase(x.g.cyc[v].begin() + p);
        std::vector<char> vdead(g.nv(), 0), hdead(g.nh(), 0);
        hdead[s] = 1;
        std::vector<int> vmap, hmap;
        x.g = compact(x.g, vdead, hdead, vmap, hmap);
        x.o.word = remap_word(x.o.word, vmap, hmap);
        f(x);
      }
    }
  }
}

}  // namespace

Component enumerate_component(const OGraph& seed, Category cat, ObjectPair src, ObjectPair tgt, int max_half_edges,
                              SullivanQuotient& sq) {
  if (cat != Category::OC && cat != Category::SD) throw GraphError("components are enumerated in OC or SD");
  Component comp;
  comp.cat = cat;
  comp.source = src;
  comp.target = tgt;
  comp.type = topological_type(seed.g);

  const bool sd = cat == Category::SD;
  std::set<Key> seen;
  std::deque<Key> todo;
  auto visit = [&](const OGraph& x0) {
    const OGraph x = sd ? trivalent_resolution(x0) : x0;
    if (x.g.nh() > max_half_edges)
      throw ResourceError("component exceeds " + std::to_string(max_half_edges) + " half-edges after " +
                          std::to_string(seen.size()) + " graphs");
    Key k = canonical_form(x).key;
    if (seen.insert(k).second) todo.push_back(k);
  };
  visit(seed);
  while (!todo.empty()) {
    Key k = todo.front();
    todo.pop_front();
    OGraph og = GraphChain::graph_of(k);
    const Graph& g = og.g;
    for (int h = 0; h < g.nh(); ++h) {
      int y = g.inv[h];
      if (y == h || h > y || g.src[h] == g.src[y]) continue;
      if (g.is_white(g.src[h]) && g.is_white(g.src[y])) continue;
      // in SD a collapsed black-black edge is followed by the other resolution
      for (const auto& t : collapse_terms(og, h)) visit(t);
      if (sd && !g.is_white(g.src[h]) && !g.is_white(g.src[y])) {
        OGraph c = collapse_terms(og, h).at(0);
        for_each_blow_up(c, [&](const OGraph& x, int) {
          if (all_black_trivalent(x.g)) visit(x);
        });
      }
    }
    for_each_blow_up(og, [&](const OGraph& x, int) {
      if (!needs_floor(x.g)) {
        visit(x);
        return;
      }
      OGraph f = x;
      if (floor_reduce(f)) visit(f);
    });
    start_leaf_moves(og, visit);
  }
  comp.graphs_visited = seen.size();

  std::set<Key> gens;
  for (const auto& k : seen) {
    if (cat == Category::SD) {
      if (!all_black_trivalent(decode(k))) continue;
      const SullivanClass& sc = sq.classify(k);
      if (!sc.is_zero) gens.insert(sc.rep);
    } else if (!canonical_form(GraphChain::graph_of(k)).is_zero) {
      gens.insert(k);
    }
  }
  for (const auto& k : gens) comp.basis[degree(decode(k))].push_back(k);
  return comp;
}

HomologyResult component_homology(const Component& c, Ring r, SullivanQuotient& sq, int twist_d) {
  std::function<GraphChain(const Key&)> d_of = [&](const Key& k) {
    GraphChain x;
    x.add(k, 1);
    return c.cat == Category::SD ? sq.differential(x) : differential(x);
  };
  ChainComplex cc = graph_complex(c.basis, d_of);
  if (twist_d != 0 && !c.basis.empty()) {
    const Key& any = c.basis.begin()->second.front();
    int shift = twist_degree(decode(any), twist_d, c.source.n + c.source.m + 1) - degree(decode(any));
    ChainComplex s;
    for (auto& [k, n] : cc.dims) s.dims[k + shift] = n;
    for (auto& [k, m] : cc.d) s.d[k + shift] = m;
    cc = std::move(s);
  }
  return homology(cc, r);
}

}  // namespace artifact
