#include "artifact/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artifact {

int Graph::num_white() const {
  int n = 0;
  for (int w : white) n += w > 0;
  return n;
}

int Graph::num_labels() const {
  int n = 0;
  for (int l : label) n += l > 0;
  for (const auto& d : degen) {
    if (d.kind == DegenKind::Single) n += 1;
    if (d.kind == DegenKind::Double) n += 2;
  }
  return n;
}

int Graph::add_vertex(int white_label) {
  cyc.emplace_back();
  white.push_back(white_label);
  start.push_back(-1);
  return nv() - 1;
}

int Graph::add_half_edge(int v, int lab) {
  int h = nh();
  src.push_back(v);
  inv.push_back(h);
  label.push_back(lab);
  cyc[v].push_back(h);
  if (white[v] > 0 && start[v] < 0) start[v] = h;
  return h;
}

void Graph::join(int h1, int h2) {
  inv[h1] = h2;
  inv[h2] = h1;
  label[h1] = 0;
  label[h2] = 0;
}

int Graph::position(int h) const {
  const auto& c = cyc[src[h]];
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (c[i] == h) return i;
  throw GraphError("half-edge missing from its cyclic order");
}

int Graph::next(int h) const {
  const auto& c = cyc[src[h]];
  int p = position(h);
  return c[(p + 1) % c.size()];
}

int Graph::prev(int h) const {
  const auto& c = cyc[src[h]];
  int p = position(h);
  return c[(p + c.size() - 1) % c.size()];
}

void validate(const Graph& g, bool require_mp) {
  const int nv = g.nv(), nh = g.nh();
  if (static_cast<int>(g.white.size()) != nv || static_cast<int>(g.start.size()) != nv)
    throw GraphError("vertex arrays have inconsistent sizes");
  if (static_cast<int>(g.inv.size()) != nh || static_cast<int>(g.label.size()) != nh)
    throw GraphError("half-edge arrays have inconsistent sizes");
  std::vector<int> seen(nh, 0);
  for (int v = 0; v < nv; ++v) {
    for (int h : g.cyc[v]) {
      if (h < 0 || h >= nh) throw GraphError("cyclic order names unknown half-edge");
      if (g.src[h] != v) throw GraphError("cyclic order disagrees with source map");
      if (seen[h]++) throw GraphError("half-edge repeated in cyclic orders");
    }
    if (g.white[v] > 0) {
      if (g.cyc[v].empty()) throw GraphError("white vertex without half-edges");
      if (g.start[v] < 0 || g.start[v] >= nh || g.src[g.start[v]] != v)
        throw GraphError("start half-edge not at its white vertex");
    } else {
      if (g.white[v] < 0) throw GraphError("negative white label");
      if (g.valence(v) < 3) throw GraphError("black vertex of valence below 3");
      if (g.start[v] != -1) throw GraphError("black vertex with a start half-edge");
    }
  }
  for (int h = 0; h < nh; ++h) {
    if (!seen[h]) throw GraphError("half-edge missing from cyclic orders");
    int p = g.inv[h];
    if (p < 0 || p >= nh || g.inv[p] != h) throw GraphError("involution is not an involution");
    if (p != h && g.label[h] != 0) throw GraphError("label on a non-leaf");
    if (g.label[h] < 0) throw GraphError("negative leaf label");
  }
  std::vector<int> labs;
  for (int h = 0; h < nh; ++h)
    if (g.label[h] > 0) labs.push_back(g.label[h]);
  for (const auto& d : g.degen) {
    if (d.kind == DegenKind::Single) labs.push_back(d.a);
    if (d.kind == DegenKind::Double) {
      labs.push_back(d.a);
      labs.push_back(d.b);
    }
  }
  std::sort(labs.begin(), labs.end());
  if (std::adjacent_find(labs.begin(), labs.end()) != labs.end())
    throw GraphError("repeated leaf label");
  for (int l : labs)
    if (l <= 0) throw GraphError("degenerate with a non-positive label");
  std::vector<int> wl;
  for (int v = 0; v < nv; ++v)
    if (g.white[v] > 0) wl.push_back(g.white[v]);
  std::sort(wl.begin(), wl.end());
  if (std::adjacent_find(wl.begin(), wl.end()) != wl.end())
    throw GraphError("repeated white label");
  if (require_mp) {
    for (int h = 0; h < nh; ++h) {
      if (g.inv[h] == h && g.label[h] == 0) {
        int v = g.src[h];
        if (!(g.white[v] > 0 && g.start[v] == h))
          throw GraphError("unlabeled leaf that is not a white start half-edge");
      }
    }
  }
}

std::vector<std::vector<int>> boundary_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(g.nh(), 0);
  for (int h0 = 0; h0 < g.nh(); ++h0) {
    if (done[h0]) continue;
    std::vector<int> c;
    int h = h0;
    while (!done[h]) {
      done[h] = 1;
      c.push_back(h);
      h = g.next(g.inv[h]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.nv(); ++v) d += g.valence(v) - (g.is_white(v) ? 1 : 3);
  return d;
}

std::vector<int> standard_word(const Graph& g) {
  std::vector<int> w;
  w.reserve(g.nv() + g.nh());
  for (int v = 0; v < g.nv(); ++v) w.push_back(vtok(v));
  for (int h = 0; h < g.nh(); ++h) w.push_back(htok(h));
  return w;
}

OrientationWord standard_orientation(const Graph& g) { return {standard_word(g), 1}; }

int permutation_sign(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int move_to_front(const std::vector<int>& word, const std::vector<int>& front, std::vector<int>& rest) {
  // parity = number of (rest token, front token) pairs with rest before front,
  // plus the inversions within front
  std::vector<int> pos(front.size(), -1);
  rest.clear();
  rest.reserve(word.size());
  long long crossings = 0;
  std::size_t rest_seen = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    int t = word[i];
    std::size_t k = 0;
    while (k < front.size() && front[k] != t) ++k;
    if (k < front.size()) {
      if (pos[k] >= 0) throw GraphError("repeated token in orientation word");
      pos[k] = static_cast<int>(i);
      crossings += static_cast<long long>(rest_seen);
    } else {
      rest.push_back(t);
      ++rest_seen;
    }
  }
  for (std::size_t k = 0; k < front.size(); ++k)
    if (pos[k] < 0) throw GraphError("token missing from orientation word");
  for (std::size_t a = 0; a < front.size(); ++a)
    for (std::size_t b = a + 1; b < front.size(); ++b)
      if (pos[a] > pos[b]) ++crossings;
  return crossings % 2 ? -1 : 1;
}

int reorder_sign(const OrientationWord& from, const OrientationWord& to) {
  if (from.word.size() != to.word.size()) throw GraphError("orientation words of different length");
  std::vector<int> sorted = to.word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("repeated token in orientation word");
  auto index = [&](int t) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
    if (it == sorted.end() || *it != t) throw GraphError("orientation token sets differ");
    return static_cast<int>(it - sorted.begin());
  };
  std::vector<int> pos_in_to(sorted.size());
  for (std::size_t i = 0; i < to.word.size(); ++i) pos_in_to[index(to.word[i])] = static_cast<int>(i);
  std::vector<int> perm(from.word.size());
  for (std::size_t i = 0; i < from.word.size(); ++i) perm[i] = pos_in_to[index(from.word[i])];
  // from = perm-sign * to as wedge words
  return permutation_sign(perm) * from.sign * to.sign;
}

OGraph make_l_n(int n) {
  if (n < 1) throw GraphError("l_n needs n >= 1");
  OGraph r;
  int w = r.g.add_vertex(1);
  for (int i = 1; i <= n; ++i) r.g.add_half_edge(w, i);
  r.g.start[w] = 0;
  r.o = standard_orientation(r.g);
  return r;
}

OrientationWord canonical_orientation_odd(const Graph& g) {
  OrientationWord o;
  for (int v = 0; v < g.nv(); ++v) {
    if (g.valence(v) % 2 == 0) throw GraphError("canonical orientation needs odd valences");
    o.word.push_back(vtok(v));
    for (int h : g.cyc[v]) o.word.push_back(htok(h));
  }
  return o;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.nv(), -1);
  std::vector<std::vector<int>> out;
  for (int v0 = 0; v0 < g.nv(); ++v0) {
    if (comp[v0] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{v0};
    comp[v0] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (int h : g.cyc[v]) {
        int w = g.src[g.inv[h]];
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

namespace {

struct Scratch {
  std::vector<int> pos, comp, vid, hid, order_v, order_h, stack, perm;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Assigns ids in traversal order starting from seed, appending to order_v/order_h.
void walk(const Graph& g, int seed, const std::vector<int>& pos, std::vector<int>& vid, std::vector<int>& hid,
          std::vector<int>& order_v, std::vector<int>& order_h) {
  std::size_t begin = order_h.size();
  auto visit = [&](int h) {
    int v = g.src[h];
    vid[v] = static_cast<int>(order_v.size());
    order_v.push_back(v);
    const auto& c = g.cyc[v];
    const std::size_t n = c.size();
    std::size_t p = pos[h];
    for (std::size_t k = 0; k < n; ++k) {
      int x = c[(p + k) % n];
      hid[x] = static_cast<int>(order_h.size());
      order_h.push_back(x);
    }
  };
  visit(seed);
  for (std::size_t i = begin; i < order_h.size(); ++i) {
    int y = g.inv[order_h[i]];
    if (hid[y] < 0) visit(y);
  }
}

struct Seedless {
  std::vector<int> code;
  std::vector<int> order_v, order_h;
};

std::vector<int> local_code(const Graph& g, const std::vector<int>& order_v, const std::vector<int>& order_h,
                            const std::vector<int>& hid, int hoff) {
  std::vector<int> code;
  code.reserve(order_v.size() + order_h.size());
  for (int v : order_v) code.push_back(g.valence(v));
  for (int h : order_h) code.push_back(hid[g.inv[h]] - hoff);
  return code;
}

}  // namespace

CanonicalClass canonical_form(const Graph& g, const OrientationWord& o) {
  CanonicalClass out;
  const int nv = g.nv(), nh = g.nh();
  Scratch& s = scratch();
  s.pos.assign(nh, 0);
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < g.valence(v); ++i) s.pos[g.cyc[v][i]] = i;
  s.comp.assign(nv, -1);
  s.vid.assign(nv, -1);
  s.hid.assign(nh, -1);
  s.order_v.clear();
  s.order_h.clear();

  // component discovery with seed selection
  struct Comp {
    int cls, rank, seed, first_vertex;
  };
  std::vector<Comp> comps;
  for (int v0 = 0; v0 < nv; ++v0) {
    if (s.comp[v0] >= 0) continue;
    int id = static_cast<int>(comps.size());
    Comp c{2, 0, -1, v0};
    int best_label = 0, best_white = 0;
    s.stack.clear();
    s.stack.push_back(v0);
    s.comp[v0] = id;
    while (!s.stack.empty()) {
      int v = s.stack.back();
      s.stack.pop_back();
      if (g.white[v] > 0 && (best_white == 0 || g.white[v] < best_white)) {
        best_white = g.white[v];
        if (best_label == 0) {
          c.cls = 1;
          c.rank = best_white;
          c.seed = g.start[v];
        }
      }
      for (int h : g.cyc[v]) {
        if (g.label[h] > 0 && (best_label == 0 || g.label[h] < best_label)) {
          best_label = g.label[h];
          c.cls = 0;
          c.rank = best_label;
          c.seed = h;
        }
        int w = g.src[g.inv[h]];
        if (s.comp[w] < 0) {
          s.comp[w] = id;
          s.stack.push_back(w);
        }
      }
    }
    comps.push_back(c);
  }
  std::sort(comps.begin(), comps.end(), [](const Comp& x, const Comp& y) {
    if (x.cls != y.cls) return x.cls < y.cls;
    return x.rank < y.rank;
  });

  bool zero = false;
  std::vector<Seedless> seedless;
  for (const Comp& c : comps) {
    if (c.cls < 2) {
      walk(g, c.seed, s.pos, s.vid, s.hid, s.order_v, s.order_h);
      continue;
    }
    // minimize over all seeds; ties are automorphisms
    std::vector<int> hs;
    for (int v = 0; v < nv; ++v)
      if (s.comp[v] == s.comp[c.first_vertex])
        for (int h : g.cyc[v]) hs.push_back(h);
    std::vector<Seedless> best;
    for (int h : hs) {
      Seedless t;
      walk(g, h, s.pos, s.vid, s.hid, t.order_v, t.order_h);
      t.code = local_code(g, t.order_v, t.order_h, s.hid, 0);
      for (int v : t.order_v) s.vid[v] = -1;
      for (int x : t.order_h) s.hid[x] = -1;
      if (best.empty() || t.code < best[0].code) {
        best.clear();
        best.push_back(std::move(t));
      } else if (t.code == best[0].code) {
        best.push_back(std::move(t));
      }
    }
    const Seedless& a = best[0];
    std::vector<int> lv(nv), lh(nh);
    for (std::size_t i = 0; i < a.order_v.size(); ++i) lv[a.order_v[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < a.order_h.size(); ++i) lh[a.order_h[i]] = static_cast<int>(i);
    for (std::size_t k = 1; k < best.size() && !zero; ++k) {
      const Seedless& b = best[k];
      std::vector<int> pv(b.order_v.size()), ph(b.order_h.size());
      for (std::size_t i = 0; i < b.order_v.size(); ++i) pv[i] = lv[b.order_v[i]];
      for (std::size_t i = 0; i < b.order_h.size(); ++i) ph[i] = lh[b.order_h[i]];
      if (permutation_sign(pv) * permutation_sign(ph) < 0) zero = true;
    }
    seedless.push_back(std::move(best[0]));
  }
  std::sort(seedless.begin(), seedless.end(),
            [](const Seedless& x, const Seedless& y) { return x.code < y.code; });
  for (std::size_t i = 0; i < seedless.size(); ++i) {
    if (i > 0 && seedless[i].code == seedless[i - 1].code &&
        (seedless[i].order_v.size() + seedless[i].order_h.size()) % 2 == 1)
      zero = true;
    for (int v : seedless[i].order_v) {
      s.vid[v] = static_cast<int>(s.order_v.size());
      s.order_v.push_back(v);
    }
    for (int h : seedless[i].order_h) {
      s.hid[h] = static_cast<int>(s.order_h.size());
      s.order_h.push_back(h);
    }
  }

  std::vector<Degenerate> degen = g.degen;
  for (auto& d : degen)
    if (d.kind == DegenKind::Double && d.a > d.b) std::swap(d.a, d.b);
  std::sort(degen.begin(), degen.end());

  Key& k = out.key;
  k.reserve(3 + 3 * nv + 2 * nh + 3 * degen.size());
  k.push_back(nv);
  k.push_back(nh);
  k.push_back(static_cast<int>(degen.size()));
  for (int v : s.order_v) {
    k.push_back(g.white[v]);
    k.push_back(g.start[v] >= 0 ? s.hid[g.start[v]] : -1);
    k.push_back(g.valence(v));
  }
  for (int h : s.order_h) {
    k.push_back(s.hid[g.inv[h]]);
    k.push_back(g.label[h]);
  }
  for (const auto& d : degen) {
    k.push_back(static_cast<int>(d.kind));
    k.push_back(d.a);
    k.push_back(d.b);
  }

  if (static_cast<int>(o.word.size()) != nv + nh)
    throw GraphError("orientation word does not enumerate vertices and half-edges");
  s.perm.clear();
  for (int t : o.word) s.perm.push_back(tok_is_vertex(t) ? s.vid[tok_id(t)] : nv + s.hid[tok_id(t)]);
  out.sign = permutation_sign(s.perm) * o.sign;
  out.is_zero = zero;
  return out;
}

Graph canonical_graph(const CanonicalClass& cc) { return decode(cc.key); }

Key encode(const Graph& g) {
  Key k;
  k.reserve(3 + 3 * g.nv() + 2 * g.nh() + 3 * g.degen.size());
  k.push_back(g.nv());
  k.push_back(g.nh());
  k.push_back(static_cast<int>(g.degen.size()));
  int next = 0;
  for (int v = 0; v < g.nv(); ++v) {
    for (int h : g.cyc[v])
      if (h != next++) throw GraphError("encode: half-edges are not laid out vertex by vertex");
    k.push_back(g.white[v]);
    k.push_back(g.start[v]);
    k.push_back(g.valence(v));
  }
  for (int h = 0; h < g.nh(); ++h) {
    k.push_back(g.inv[h]);
    k.push_back(g.label[h]);
  }
  for (const auto& d : g.degen) {
    k.push_back(static_cast<int>(d.kind));
    k.push_back(d.a);
    k.push_back(d.b);
  }
  return k;
}

Graph decode(const Key& k) {
  Graph g;
  std::size_t p = 0;
  auto next = [&]() {
    if (p >= k.size()) throw GraphError("truncated graph key");
    return k[p++];
  };
  int nv = next(), nh = next(), nd = next();
  if (nv < 0 || nh < 0 || nd < 0) throw GraphError("malformed graph key");
  g.cyc.resize(nv);
  g.white.resize(nv);
  g.start.resize(nv);
  g.src.assign(nh, -1);
  g.inv.resize(nh);
  g.label.resize(nh);
  int h = 0;
  for (int v = 0; v < nv; ++v) {
    g.white[v] = next();
    g.start[v] = next();
    int val = next();
    for (int i = 0; i < val; ++i, ++h) {
      if (h >= nh) throw GraphError("malformed graph key");
      g.cyc[v].push_back(h);
      g.src[h] = v;
    }
  }
  if (h != nh) throw GraphError("malformed graph key");
  for (int x = 0; x < nh; ++x) {
    g.inv[x] = next();
    g.label[x] = next();
  }
  for (int i = 0; i < nd; ++i) {
    Degenerate d;
    d.kind = static_cast<DegenKind>(next());
    d.a = next();
    d.b = next();
    g.degen.push_back(d);
  }
  return g;
}


Graph compact(const Graph& g, const std::vector<char>& vdead, const std::vector<char>& hdead,
              std::vector<int>& vmap, std::vector<int>& hmap) {
  vmap.assign(g.nv(), -1);
  hmap.assign(g.nh(), -1);
  int nv = 0, nh = 0;
  for (int v = 0; v < g.nv(); ++v)
    if (!vdead[v]) vmap[v] = nv++;
  for (int h = 0; h < g.nh(); ++h)
    if (!hdead[h]) hmap[h] = nh++;
  Graph r;
  r.cyc.resize(nv);
  r.white.resize(nv);
  r.start.resize(nv);
  r.src.resize(nh);
  r.inv.resize(nh);
  r.label.resize(nh);
  for (int v = 0; v < g.nv(); ++v) {
    if (vdead[v]) continue;
    int nvid = vmap[v];
    r.white[nvid] = g.white[v];
    r.start[nvid] = g.start[v] >= 0 ? hmap[g.start[v]] : -1;
    for (int h : g.cyc[v]) {
      if (hmap[h] < 0) throw GraphError("compact: live vertex references dead half-edge");
      r.cyc[nvid].push_back(hmap[h]);
    }
  }
  for (int h = 0; h < g.nh(); ++h) {
    if (hdead[h]) continue;
    int x = hmap[h];
    r.src[x] = vmap[g.src[h]];
    r.inv[x] = hmap[g.inv[h]];
    r.label[x] = g.label[h];
    if (r.src[x] < 0 || r.inv[x] < 0) throw GraphError("compact: dangling reference");
  }
  r.degen = g.degen;
  return r;
}

std::vector<int> remap_word(const std::vector<int>& word, const std::vector<int>& vmap,
                            const std::vector<int>& hmap) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int t : word) {
    int id = tok_is_vertex(t) ? vmap[tok_id(t)] : hmap[tok_id(t)];
    if (id < 0) continue;
    out.push_back(tok_is_vertex(t) ? vtok(id) : htok(id));
  }
  return out;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.nv(); ++v) {
    os << (g.is_white(v) ? "w" + std::to_string(g.white[v]) : "b") << v << "(";
    for (std::size_t i = 0; i < g.cyc[v].size(); ++i) {
      int h = g.cyc[v][i];
      if (i) os << ",";
      if (g.start[v] == h) os << "*";
      os << h;
      if (g.inv[h] == h) os << "[" << g.label[h] << "]";
      else os << ">" << g.inv[h];
    }
    os << ") ";
  }
  for (const auto& d : g.degen) {
    if (d.kind == DegenKind::Single) os << "S[" << d.a << "] ";
    if (d.kind == DegenKind::Double) os << "D[" << d.a << "," << d.b << "] ";
    if (d.kind == DegenKind::Circle) os << "O ";
    if (d.kind == DegenKind::Disk) os << "Disk ";
  }
  return os.str();
}

}  // namespace artifact
