#include <algorithm>
#include <numeric>
#include <sstream>

#include "artifact/categories.hpp"

namespace artifact {

namespace {

std::vector<int> min_rotation(const std::vector<int>& s) {
  std::vector<int> best = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::vector<int> t(s.begin() + r, s.end());
    t.insert(t.end(), s.begin(), s.begin() + r);
    if (t < best) best = t;
  }
  return best;
}

}  // namespace

TopologicalType topological_type(const Graph& g) {
  TopologicalType out;
  auto comps = components(g);
  std::vector<int> comp_of(g.nv(), -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> vb(comps.size(), 0), halves(comps.size(), 0), cycles(comps.size(), 0);
  out.resize(comps.size());
  for (int v = 0; v < g.nv(); ++v) {
    int c = comp_of[v];
    if (g.is_white(v)) out[c].whites.push_back(g.white[v]);
    else ++vb[c];
  }
  for (int h = 0; h < g.nh(); ++h)
    if (g.inv[h] != h) ++halves[comp_of[g.src[h]]];
  for (const auto& cy : boundary_cycles(g)) {
    int c = comp_of[g.src[cy[0]]];
    ++cycles[c];
    std::vector<int> labs;
    for (int h : cy)
      if (g.inv[h] == h && g.label[h] > 0) labs.push_back(g.label[h]);
    out[c].boundaries.push_back(min_rotation(labs));
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int chi = vb[c] - halves[c] / 2;
    int b = cycles[c] + static_cast<int>(out[c].whites.size());
    out[c].genus = (2 - chi - b) / 2;
    std::sort(out[c].boundaries.begin(), out[c].boundaries.end());
    std::sort(out[c].whites.begin(), out[c].whites.end());
  }
  for (const auto& d : g.degen) {
    ComponentType t;
    if (d.kind == DegenKind::Single) t.boundaries = {{d.a}};
    if (d.kind == DegenKind::Double) t.boundaries = {{std::min(d.a, d.b), std::max(d.a, d.b)}};
    if (d.kind == DegenKind::Circle) t.boundaries = {{}, {}};
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const TopologicalType& t) {
  std::ostringstream os;
  for (const auto& c : t) {
    os << "{g=" << c.genus << " b=";
    for (const auto& b : c.boundaries) {
      os << "(";
      for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
      os << ")";
    }
    os << " w=";
    for (int w : c.whites) os << w << ";";
    os << "}";
  }
  return os.str();
}

bool is_member(const Graph& g, Category cat, ObjectPair src, ObjectPair tgt) {
  try {
    check_morphism(g, src, tgt);
  } catch (const GraphError&) {
    return false;
  }
  const int first_out = src.n + src.m + 1;
  auto is_out = [&](int l) { return l >= first_out; };
  auto is_closed_in = [&](int l) { return l >= 1 && l <= src.n; };
  const bool open_only = src.n == 0 && tgt.n == 0;
  auto type = topological_type(g);
  auto outs_of = [&](const ComponentType& c) {
    int outs = 0;
    for (const auto& b : c.boundaries)
      for (int l : b) outs += is_out(l);
    return outs;
  };
  switch (cat) {
    case Category::OC:
    case Category::SD:
      return cat == Category::OC || [&] {
        for (int v = 0; v < g.nv(); ++v)
          if (!g.is_white(v) && g.valence(v) > 3) return false;
        return true;
      }();
    case Category::O: return open_only;
    case Category::Ainf:
    case Category::AinfPlus: {
      if (!open_only) return false;
      for (const auto& d : g.degen) {
        if (d.kind == DegenKind::Circle || d.kind == DegenKind::Disk) return false;
        if (d.kind == DegenKind::Double && is_out(d.a) == is_out(d.b)) return false;
        if (d.kind == DegenKind::Single && !(cat == Category::AinfPlus && is_out(d.a))) return false;
      }
      for (const auto& c : type) {
        if (c.genus != 0 || c.boundaries.size() != 1) return false;
        if (outs_of(c) != 1) return false;
        if (c.boundaries[0].size() < 2 && !(cat == Category::AinfPlus)) return false;
      }
      return true;
    }
    case Category::Ob:
    case Category::OCb: {
      if (cat == Category::Ob && !open_only) return false;
      for (const auto& c : type)
        if (outs_of(c) == 0 && c.whites.empty()) return false;
      return true;
    }
    case Category::Ann: {
      for (const auto& d : g.degen)
        if (d.kind == DegenKind::Circle || d.kind == DegenKind::Disk) return false;
      for (const auto& c : type) {
        if (c.genus != 0) return false;
        int closed = 0;
        for (const auto& b : c.boundaries)
          for (int l : b) closed += is_closed_in(l);
        if (c.whites.empty()) {
          if (c.boundaries.size() != 1 || outs_of(c) != 1 || closed) return false;
        } else {
          if (c.whites.size() != 1 || c.boundaries.size() != 1 || outs_of(c) != 0) return false;
          if (closed && c.boundaries[0].size() != 1) return false;
        }
      }
      return true;
    }
  }
  return false;
}

OGraph attach_wheels(const OGraph& g, int m1, const std::vector<int>& ks, int m2) {
  const int K = std::accumulate(ks.begin(), ks.end(), 0);
  OGraph L;
  int shift = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    OGraph l = make_l_n(ks[i]);
    L = disjoint_union(L, l, shift, static_cast<int>(i));
    shift += ks[i];
  }
  for (int j = 1; j <= m2; ++j) L.g.degen.push_back({DegenKind::Double, K + j, K + m2 + j});
  std::sort(L.g.degen.begin(), L.g.degen.end());
  const int n = static_cast<int>(ks.size());
  auto terms = compose_terms(g, L, {m1, 0}, {K + m2, 0}, {m2, n});
  if (terms.size() != 1) throw GraphError("attach_wheels: gluing vanished");
  return terms[0];
}

CutResult cut_wheels(const OGraph& x, int m1, int m2) {
  const Graph& g = x.g;
  CutResult res;
  std::vector<int> whites;
  for (int v = 0; v < g.nv(); ++v)
    if (g.is_white(v)) whites.push_back(v);
  std::sort(whites.begin(), whites.end(), [&](int a, int b) { return g.white[a] < g.white[b]; });
  std::vector<int> out_label(g.nh(), 0);
  int next = m1;
  for (int v : whites) {
    const auto& c = g.cyc[v];
    int p = g.position(g.start[v]);
    for (std::size_t k = 0; k < c.size(); ++k) out_label[c[(p + k) % c.size()]] = ++next;
    res.ks.push_back(static_cast<int>(c.size()));
  }
  const int K = next - m1;
  Graph t = g;
  std::vector<char> vdead(g.nv(), 0), hdead(g.nh(), 0);
  for (int h = 0; h < g.nh(); ++h)
    if (t.label[h] > m1) t.label[h] += K;
  for (auto& d : t.degen) {
    if (d.kind != DegenKind::Single && d.kind != DegenKind::Double) continue;
    if (d.a > m1) d.a += K;
    if (d.kind == DegenKind::Double && d.b > m1) d.b += K;
  }
  for (int v : whites) {
    vdead[v] = 1;
    for (int h : g.cyc[v]) {
      hdead[h] = 1;
      int y = g.inv[h];
      if (y == h) {
        if (t.label[h] > 0)
          t.degen.push_back({DegenKind::Double, std::min(t.label[h], out_label[h]), std::max(t.label[h], out_label[h])});
        else
          t.degen.push_back({DegenKind::Single, out_label[h], 0});
      } else if (g.is_white(g.src[y])) {
        if (h < y) t.degen.push_back({DegenKind::Double, out_label[h], out_label[y]});
      } else {
        t.inv[y] = y;
        t.label[y] = out_label[h];
      }
    }
    t.cyc[v].clear();
  }
  std::vector<int> vmap, hmap;
  res.graph.g = compact(t, vdead, hdead, vmap, hmap);
  std::sort(res.graph.g.degen.begin(), res.graph.g.degen.end());
  res.graph.o = standard_orientation(res.graph.g);
  OGraph back = attach_wheels(res.graph, m1, res.ks, m2);
  CanonicalClass cb = canonical_form(back), cx = canonical_form(x);
  if (cb.key != cx.key) throw GraphError("cut_wheels: round trip changed the graph");
  res.graph.o.sign = cb.sign * cx.sign;
  return res;
}

}  // namespace artifact
