#include "artifact/categories.hpp"

#include <algorithm>
#include <functional>

#include "artifact/complexes.hpp"

namespace artifact {

std::string category_name(Category c) {
  switch (c) {
    case Category::O: return "O";
    case Category::Ainf: return "Ainf";
    case Category::AinfPlus: return "Ainf+";
    case Category::OC: return "OC";
    case Category::SD: return "SD";
    case Category::Ob: return "Ob";
    case Category::OCb: return "OCb";
    case Category::Ann: return "Ann";
  }
  return "?";
}

Category parse_category(const std::string& s) {
  for (Category c : {Category::O, Category::Ainf, Category::AinfPlus, Category::OC, Category::SD, Category::Ob,
                     Category::OCb, Category::Ann})
    if (category_name(c) == s) return c;
  if (s == "AinfPlus") return Category::AinfPlus;
  throw std::invalid_argument("unknown category: " + s);
}

namespace {

int find_label(const Graph& g, int lab) {
  for (int h = 0; h < g.nh(); ++h)
    if (g.inv[h] == h && g.label[h] == lab) return h;
  return -1;
}

// Working graph: degenerates other than circles become temporary vertices of
// valence 1 (Single) or 2 (Double) carrying no orientation tokens.
struct Work {
  Graph g;
  std::vector<char> temp;
  std::vector<int> word;
  int sign = 1;

  void append(const OGraph& og, int label_sign, int& voff, int& hoff) {
    voff = g.nv();
    hoff = g.nh();
    const Graph& x = og.g;
    for (int v = 0; v < x.nv(); ++v) {
      g.cyc.emplace_back();
      for (int h : x.cyc[v]) g.cyc.back().push_back(h + hoff);
      g.white.push_back(x.white[v]);
      g.start.push_back(x.start[v] < 0 ? -1 : x.start[v] + hoff);
      temp.push_back(0);
    }
    for (int h = 0; h < x.nh(); ++h) {
      g.src.push_back(x.src[h] + voff);
      g.inv.push_back(x.inv[h] + hoff);
      g.label.push_back(x.label[h] * label_sign);
    }
    for (const auto& d : x.degen) {
      if (d.kind == DegenKind::Circle || d.kind == DegenKind::Disk) {
        g.degen.push_back(d);
        continue;
      }
      int v = g.add_vertex(0);
      temp.push_back(1);
      g.add_half_edge(v, d.a * label_sign);
      if (d.kind == DegenKind::Double) g.add_half_edge(v, d.b * label_sign);
    }
    for (int t : og.o.word) word.push_back(tok_is_vertex(t) ? vtok(tok_id(t) + voff) : htok(tok_id(t) + hoff));
    sign *= og.o.sign;
  }
};

// Removes temporary vertices, compacts and applies the floor. Returns false
// when the term vanishes.
bool finish(Work& w, std::vector<char>& vdead, std::vector<char>& hdead, OGraph& out) {
  Graph& g = w.g;
  for (int v = 0; v < g.nv(); ++v) {
    if (!w.temp[v] || vdead[v]) continue;
    vdead[v] = 1;
    if (g.valence(v) == 1) {
      int p = g.cyc[v][0];
      int y = g.inv[p];
      if (y != p) {
        g.inv[y] = y;
        g.label[y] = 0;
      } else if (g.label[p] > 0) {
        g.degen.push_back({DegenKind::Single, g.label[p], 0});
      } else {
        g.degen.push_back({DegenKind::Disk, 0, 0});
      }
      hdead[p] = 1;
    } else if (g.valence(v) == 2) {
      int p = g.cyc[v][0], q = g.cyc[v][1];
      splice(g, p, q);
      hdead[p] = hdead[q] = 1;
    } else {
      return false;  // edges were attached to a capped circle
    }
    g.cyc[v].clear();
  }
  std::vector<int> vmap, hmap;
  out.g = compact(g, vdead, hdead, vmap, hmap);
  out.o.word = remap_word(w.word, vmap, hmap);
  out.o.sign = w.sign;
  std::sort(out.g.degen.begin(), out.g.degen.end());
  return floor_reduce(out);
}

}  // namespace

void check_morphism(const Graph& g, ObjectPair src, ObjectPair tgt) {
  validate(g, true);
  const int L = src.n + src.m + tgt.m;
  std::vector<int> seen(L + 1, 0);
  for (int h = 0; h < g.nh(); ++h)
    if (g.label[h] > 0) {
      if (g.label[h] > L) throw GraphError("leaf label out of range");
      seen[g.label[h]]++;
    }
  for (const auto& d : g.degen) {
    if (d.kind == DegenKind::Circle || d.kind == DegenKind::Disk) continue;
    for (int l : {d.a, d.b}) {
      if (l == 0) continue;
      if (l > L) throw GraphError("leaf label out of range");
      if (l <= src.n) throw GraphError("closed incoming label on a degenerate leaf");
      seen[l]++;
    }
  }
  for (int l = 1; l <= L; ++l)
    if (seen[l] != 1) throw GraphError("leaf label " + std::to_string(l) + " missing");
  std::vector<int> wl;
  for (int v = 0; v < g.nv(); ++v)
    if (g.is_white(v)) wl.push_back(g.white[v]);
  std::sort(wl.begin(), wl.end());
  for (int i = 0; i < static_cast<int>(wl.size()); ++i)
    if (wl[i] != i + 1) throw GraphError("white labels are not 1..n");
  if (static_cast<int>(wl.size()) != tgt.n) throw GraphError("wrong number of white vertices");
  if (src.n == 0) return;
  for (const auto& c : boundary_cycles(g)) {
    int closed = 0, labeled = 0;
    for (int h : c)
      if (g.inv[h] == h && g.label[h] > 0) {
        ++labeled;
        if (g.label[h] <= src.n) ++closed;
      }
    if (closed > 0 && labeled > 1) throw GraphError("closed incoming leaf shares its boundary cycle");
  }
}

std::vector<OGraph> compose_terms(const OGraph& g1, const OGraph& g2, ObjectPair a, ObjectPair b, ObjectPair c) {
  Work w;
  int v1, h1, v2, h2;
  w.append(g1, 1, v1, h1);
  w.append(g2, -1, v2, h2);
  const int n2 = b.n;

  struct Wheel {
    int v, h, lam;
    std::vector<int> xs;       // remaining half-edges of v after its start
    std::vector<int> corners;  // half-edges of G2 after which a corner opens
  };
  std::vector<Wheel> wheels(n2);
  for (int i = 1; i <= n2; ++i) {
    Wheel& wh = wheels[i - 1];
    wh.v = -1;
    for (int v = v1; v < v1 + g1.g.nv(); ++v)
      if (w.g.white[v] == i) wh.v = v;
    if (wh.v < 0) throw GraphError("compose: missing white vertex " + std::to_string(i));
    wh.h = w.g.start[wh.v];
    const auto& cy = w.g.cyc[wh.v];
    int p = w.g.position(wh.h);
    for (std::size_t k = 1; k < cy.size(); ++k) wh.xs.push_back(cy[(p + k) % cy.size()]);
    wh.lam = find_label(w.g, -i);
    if (wh.lam < 0) throw GraphError("compose: missing closed incoming leaf " + std::to_string(i));
    int u = w.g.src[wh.lam];
    if (w.temp[u]) {
      if (w.g.valence(u) != 1) throw GraphError("compose: closed incoming leaf on a doubly labeled leaf");
      if (!wh.xs.empty()) return {};
      continue;
    }
    int x = wh.lam;
    do {
      wh.corners.push_back(w.g.inv[x]);
      x = w.g.next(w.g.inv[x]);
    } while (x != wh.lam);
  }
  std::vector<int> front;
  for (auto& wh : wheels) {
    front.push_back(vtok(wh.v));
    front.push_back(htok(wh.h));
  }
  std::vector<int> rest;
  const int pair_sign = move_to_front(w.word, front, rest);

  std::vector<OGraph> out;
  std::vector<std::vector<int>> choice(n2);
  std::function<void(int, int, int)> rec = [&](int i, int k, int lo) {
    if (i == n2) {
      Work t = w;
      t.word = rest;
      t.sign *= pair_sign;
      Graph& g = t.g;
      std::vector<char> vdead(g.nv(), 0), hdead(g.nh(), 0);
      std::vector<int> lam_of(g.nh(), -1);
      for (int j = 0; j < n2; ++j) lam_of[wheels[j].h] = wheels[j].lam;
      for (int j = 0; j < n2; ++j) {
        const Wheel& wh = wheels[j];
        // insert in reverse so that equal corners keep the cyclic order
        for (int q = static_cast<int>(wh.xs.size()) - 1; q >= 0; --q) {
          int after = wh.corners[choice[j][q]];
          int u = g.src[after];
          auto& cy = g.cyc[u];
          auto it = std::find(cy.begin(), cy.end(), after);
          cy.insert(it + 1, wh.xs[q]);
          g.src[wh.xs[q]] = u;
        }
        g.cyc[wh.v].clear();
        vdead[wh.v] = 1;
        hdead[wh.h] = 1;
        g.label[wh.lam] = 0;
      }
      for (int j = 0; j < n2; ++j) {
        const Wheel& wh = wheels[j];
        int y = w.g.inv[wh.h];
        if (y == wh.h) {
          g.inv[wh.lam] = wh.lam;
          g.label[wh.lam] = w.g.label[wh.h];
          g.label[wh.h] = 0;
        } else if (lam_of[y] >= 0) {
          g.inv[wh.lam] = lam_of[y];
        } else {
          g.inv[wh.lam] = y;
          g.inv[y] = wh.lam;
        }
      }
      for (int j = 1; j <= b.m; ++j) {
        int p = find_label(g, a.n + a.m + j);
        int q = find_label(g, -(n2 + j));
        if (p < 0 || q < 0) throw GraphError("compose: open boundary mismatch");
        g.join(p, q);
      }
      for (int h = 0; h < g.nh(); ++h) {
        int l = g.label[h];
        if (l < 0) {
          if (-l <= n2 + b.m) throw GraphError("compose: unglued incoming leaf");
          g.label[h] = a.n + a.m + (-l - n2 - b.m);
        } else if (l > a.n + a.m && !hdead[h]) {
          throw GraphError("compose: unglued outgoing leaf");
        }
      }
      OGraph r;
      if (finish(t, vdead, hdead, r)) out.push_back(std::move(r));
      return;
    }
    const Wheel& wh = wheels[i];
    if (k == static_cast<int>(wh.xs.size())) {
      rec(i + 1, 0, 0);
      return;
    }
    const int r = static_cast<int>(wh.corners.size());
    for (int j = lo; j < r; ++j) {
      choice[i].push_back(j);
      rec(i, k + 1, j);
      choice[i].pop_back();
    }
  };
  for (int i = 0; i < n2; ++i) choice[i].clear();
  rec(0, 0, 0);
  (void)c;
  return out;
}

void strip_disks(Graph& g) {
  std::erase_if(g.degen, [](const Degenerate& d) { return d.kind == DegenKind::Disk; });
}

int euler_out(const Graph& g, int first_out) {
  int chi = 0;
  for (int v = 0; v < g.nv(); ++v)
    if (!g.is_white(v)) ++chi;
  int halves = 0;
  for (int h = 0; h < g.nh(); ++h) {
    if (g.inv[h] != h) ++halves;
    else if (g.label[h] >= first_out) --chi;
  }
  chi -= halves / 2;
  for (const auto& d : g.degen) {
    if (d.kind == DegenKind::Circle) continue;
    chi += 1;
    if (d.kind == DegenKind::Disk) continue;
    if (d.a >= first_out) --chi;
    if (d.kind == DegenKind::Double && d.b >= first_out) --chi;
  }
  return chi;
}

int twist_degree(const Graph& g, int d, int first_out) { return degree(g) - d * euler_out(g, first_out); }

int twist_sign(const Graph& g1, const Graph& g2, int d, int first_out1) {
  long long e = static_cast<long long>(d) * (g2.nv() + g2.nh()) * euler_out(g1, first_out1);
  return (e % 2 == 0) ? 1 : -1;
}

GraphChain compose(const OGraph& g1, const OGraph& g2, ObjectPair a, ObjectPair b, ObjectPair c, int twist_d,
                   Ring r) {
  GraphChain out(r);
  int s = twist_d ? twist_sign(g1.g, g2.g, twist_d, a.n + a.m + 1) : 1;
  for (auto& t : compose_terms(g1, g2, a, b, c)) {
    if (twist_d == 0) strip_disks(t.g);
    out.add(t, s);
  }
  return out;
}

GraphChain compose(const GraphChain& g1, const GraphChain& g2, ObjectPair a, ObjectPair b, ObjectPair c,
                   int twist_d) {
  GraphChain out(g1.ring());
  for (const auto& [k1, c1] : g1.terms()) {
    OGraph x = GraphChain::graph_of(k1);
    for (const auto& [k2, c2] : g2.terms()) {
      OGraph y = GraphChain::graph_of(k2);
      out.add(compose(x, y, a, b, c, twist_d, g1.ring()), c1 * c2);
    }
  }
  return out;
}

OGraph disjoint_union(const OGraph& g, const OGraph& h, int label_shift, int white_shift) {
  OGraph r = g;
  const int voff = g.g.nv(), hoff = g.g.nh();
  for (int v = 0; v < h.g.nv(); ++v) {
    r.g.cyc.emplace_back();
    for (int x : h.g.cyc[v]) r.g.cyc.back().push_back(x + hoff);
    r.g.white.push_back(h.g.white[v] > 0 ? h.g.white[v] + white_shift : 0);
    r.g.start.push_back(h.g.start[v] < 0 ? -1 : h.g.start[v] + hoff);
  }
  for (int x = 0; x < h.g.nh(); ++x) {
    r.g.src.push_back(h.g.src[x] + voff);
    r.g.inv.push_back(h.g.inv[x] + hoff);
    r.g.label.push_back(h.g.label[x] > 0 ? h.g.label[x] + label_shift : 0);
  }
  for (auto d : h.g.degen) {
    if (d.kind == DegenKind::Single || d.kind == DegenKind::Double) {
      d.a += label_shift;
      if (d.kind == DegenKind::Double) d.b += label_shift;
    }
    r.g.degen.push_back(d);
  }
  std::sort(r.g.degen.begin(), r.g.degen.end());
  for (int t : h.o.word) r.o.word.push_back(tok_is_vertex(t) ? vtok(tok_id(t) + voff) : htok(tok_id(t) + hoff));
  r.o.sign *= h.o.sign;
  return r;
}

OGraph identity_morphism(ObjectPair x) {
  OGraph r;
  for (int i = 1; i <= x.n; ++i) {
    int w = r.g.add_vertex(i);
    int h = r.g.add_half_edge(w, i);
    r.o.word.push_back(vtok(w));
    r.o.word.push_back(htok(h));
  }
  for (int j = 1; j <= x.m; ++j) r.g.degen.push_back({DegenKind::Double, x.n + j, x.n + x.m + j});
  return r;
}

}  // namespace artifact
