#include "artifact/complexes.hpp"

#include <functional>

namespace artifact {

namespace {

std::vector<int> rotated_after(const std::vector<int>& c, int h) {
  std::vector<int> out;
  std::size_t p = 0;
  while (c[p] != h) ++p;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[(p + k) % c.size()]);
  return out;
}

}  // namespace

std::vector<OGraph> collapse_terms(const OGraph& og, int h1) {
  const Graph& g = og.g;
  int h2 = g.inv[h1];
  if (h2 == h1) throw GraphError("collapse: half-edge is a leaf");
  int v1 = g.src[h1], v2 = g.src[h2];
  if (v1 == v2) throw GraphError("collapse: edge is a loop");
  if (g.is_white(v1) && g.is_white(v2)) throw GraphError("collapse: edge joins two white vertices");

  std::vector<int> rest;
  int s = og.o.sign * move_to_front(og.o.word, {vtok(v1), vtok(v2), htok(h1), htok(h2)}, rest);
  std::vector<int> word;
  word.reserve(rest.size() + 1);
  word.push_back(vtok(v1));
  word.insert(word.end(), rest.begin(), rest.end());

  Graph m = g;
  std::vector<int> a = rotated_after(g.cyc[v1], h1);
  std::vector<int> b = rotated_after(g.cyc[v2], h2);
  m.cyc[v1] = a;
  m.cyc[v1].insert(m.cyc[v1].end(), b.begin(), b.end());
  m.cyc[v2].clear();
  for (int x : b) m.src[x] = v1;
  int w = g.is_white(v1) ? v1 : (g.is_white(v2) ? v2 : -1);
  std::vector<int> placements;
  if (w >= 0) {
    m.white[v1] = g.white[w];
    int st = g.start[w];
    if (st != h1 && st != h2) {
      placements.push_back(st);
    } else {
      placements = (w == v1) ? b : a;
    }
  }
  m.white[v2] = 0;
  m.start[v2] = -1;

  std::vector<char> vdead(g.nv(), 0), hdead(g.nh(), 0);
  vdead[v2] = 1;
  hdead[h1] = hdead[h2] = 1;
  std::vector<OGraph> out;
  auto emit = [&](int st) {
    Graph t = m;
    t.start[v1] = st;
    std::vector<int> vmap, hmap;
    OGraph r;
    r.g = compact(t, vdead, hdead, vmap, hmap);
    r.o.word = remap_word(word, vmap, hmap);
    r.o.sign = s;
    out.push_back(std::move(r));
  };
  if (w < 0) emit(-1);
  else
    for (int st : placements) emit(st);
  return out;
}

GraphChain collapse(const OGraph& og, int h, Ring r) {
  GraphChain c(r);
  for (const auto& t : collapse_terms(og, h)) c.add(t, 1);
  return c;
}

void for_each_blow_up(const OGraph& og, const std::function<void(const OGraph&, int)>& f) {
  const Graph& g = og.g;
  OGraph work;
  work.g = g;
  Graph& t = work.g;
  const int v2 = t.add_vertex(0);
  const int e1 = t.nh(), e2 = e1 + 1;
  t.src.push_back(-1);
  t.src.push_back(v2);
  t.inv.push_back(e2);
  t.inv.push_back(e1);
  t.label.push_back(0);
  t.label.push_back(0);
  std::vector<int> rest;
  for (int v = 0; v < g.nv(); ++v) {
    const int k = g.valence(v);
    const auto& c = g.cyc[v];
    int s = og.o.sign * move_to_front(og.o.word, {vtok(v)}, rest);
    work.o.word.assign({vtok(v), vtok(v2), htok(e1), htok(e2)});
    work.o.word.insert(work.o.word.end(), rest.begin(), rest.end());
    work.o.sign = s;
    t.src[e1] = v;
    auto run = [&](int i, int a, int new_start) {
      // moved arc c[i..i+a-1] goes to v2, the rest stays at v after e1
      auto& cv = t.cyc[v];
      auto& cw = t.cyc[v2];
      cv.clear();
      cw.clear();
      cv.push_back(e1);
      cw.push_back(e2);
      for (int j = 0; j < a; ++j) {
        int x = c[(i + j) % k];
        cw.push_back(x);
        t.src[x] = v2;
      }
      for (int j = a; j < k; ++j) cv.push_back(c[(i + j) % k]);
      if (g.is_white(v)) t.start[v] = new_start < 0 ? e1 : new_start;
      f(work, e1);
      for (int j = 0; j < a; ++j) t.src[c[(i + j) % k]] = v;
    };
    if (!g.is_white(v)) {
      // arcs avoiding c[0], so that each unordered split appears once
      for (int i = 1; i < k; ++i)
        for (int a = 2; a <= k - 2 && i + a <= k; ++a) run(i, a, -1);
    } else {
      for (int a = 2; a <= k; ++a)
        for (int i = 0; i < k; ++i) {
          bool has_start = false;
          for (int j = 0; j < a; ++j)
            if (c[(i + j) % k] == g.start[v]) has_start = true;
          run(i, a, has_start ? -1 : g.start[v]);
        }
    }
    t.cyc[v] = c;
    t.cyc[v2].clear();
    t.start[v] = g.start[v];
  }
}

std::vector<BlowUp> blow_ups(const OGraph& og) {
  std::vector<BlowUp> out;
  for_each_blow_up(og, [&](const OGraph& x, int e) { out.push_back({x, e}); });
  return out;
}

bool needs_floor(const Graph& g) {
  for (int h = 0; h < g.nh(); ++h) {
    if (g.inv[h] != h || g.label[h] != 0) continue;
    int v = g.src[h];
    if (!(g.is_white(v) && g.start[v] == h)) return true;
  }
  return false;
}

void splice(Graph& g, int h1, int h2) {
  int p1 = g.inv[h1], p2 = g.inv[h2];
  bool leaf1 = p1 == h1, leaf2 = p2 == h2;
  if (p1 == h2) {
    g.degen.push_back({DegenKind::Circle, 0, 0});
  } else if (!leaf1 && !leaf2) {
    g.inv[p1] = p2;
    g.inv[p2] = p1;
  } else if (leaf1 && !leaf2) {
    g.inv[p2] = p2;
    g.label[p2] = g.label[h1];
  } else if (!leaf1 && leaf2) {
    g.inv[p1] = p1;
    g.label[p1] = g.label[h2];
  } else {
    int l1 = g.label[h1], l2 = g.label[h2];
    if (l1 > 0 && l2 > 0) g.degen.push_back({DegenKind::Double, std::min(l1, l2), std::max(l1, l2)});
    else if (l1 > 0 || l2 > 0) g.degen.push_back({DegenKind::Single, std::max(l1, l2), 0});
    else g.degen.push_back({DegenKind::Disk, 0, 0});
  }
  // detach so that compaction sees no stale references
  g.inv[h1] = h1;
  g.inv[h2] = h2;
}

bool floor_reduce(OGraph& og) {
  for (;;) {
    Graph& g = og.g;
    int leaf = -1;
    for (int h = 0; h < g.nh(); ++h) {
      if (g.inv[h] != h || g.label[h] != 0) continue;
      int v = g.src[h];
      if (g.is_white(v) && g.start[v] == h) continue;
      leaf = h;
      break;
    }
    if (leaf < 0) return true;
    int v = g.src[leaf];
    if (g.is_white(v) || g.valence(v) != 3) return false;
    int h1 = g.next(leaf), h2 = g.next(h1);
    std::vector<int> rest;
    og.o.sign *= move_to_front(og.o.word, {vtok(v), htok(leaf), htok(h1), htok(h2)}, rest);
    splice(g, h1, h2);
    std::vector<char> vdead(g.nv(), 0), hdead(g.nh(), 0);
    vdead[v] = 1;
    hdead[leaf] = hdead[h1] = hdead[h2] = 1;
    std::vector<int> vmap, hmap;
    Graph r = compact(g, vdead, hdead, vmap, hmap);
    og.o.word = remap_word(rest, vmap, hmap);
    og.g = std::move(r);
  }
}

GraphChain floor_chain(const OGraph& og, Ring r) {
  GraphChain c(r);
  OGraph t = og;
  if (floor_reduce(t)) c.add(t, 1);
  return c;
}

GraphChain differential(const OGraph& og, Ring r) {
  GraphChain c(r);
  for_each_blow_up(og, [&](const OGraph& x, int) {
    if (!needs_floor(x.g)) {
      c.add(x, 1);
      return;
    }
    OGraph y = x;
    if (floor_reduce(y)) c.add(y, 1);
  });
  return c;
}

GraphChain differential(const GraphChain& c) {
  GraphChain out(c.ring());
  for (const auto& [k, v] : c.terms()) out.add(differential(GraphChain::graph_of(k), c.ring()), v);
  return out;
}

}  // namespace artifact
