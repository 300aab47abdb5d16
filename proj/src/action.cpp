#include "artifact/action.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "artifact/complexes.hpp"

namespace artifact {

namespace {

// Endpoints of the three layers before labels are assigned.
enum class End { GIn, GOut, MIn, MOut, WIn, WOut };
struct Ref {
  End kind;
  int id;
};

int parity_sign(long long e) { return (e % 2) ? -1 : 1; }

std::vector<int> concat(const MultiWord& ws) {
  std::vector<int> out;
  for (const auto& w : ws) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// prod_i (-1)^{(k_i - 1)(sum_{j>i} |w_j| + |b|)}
int wheel_sign(const Algebra& a, const MultiWord& ws) {
  long long tail = 0;
  int s = 1;
  for (int i = static_cast<int>(ws.size()) - 1; i >= 0; --i) {
    if (i < static_cast<int>(ws.size()) - 1) s *= parity_sign((static_cast<long long>(ws[i].size()) - 1) * tail);
    tail += word_degree(a, ws[i]);
  }
  return s;
}

}  // namespace

Evaluator::Evaluator(Algebra a) : a_(std::move(a)) {
  if (a_.dimension_d % 2) throw ActionError("evaluation for odd d is not supported");
  if (a_.has_trace) cop_ = copairing(a_);
}

const EvaluationPlan& Evaluator::plan(const OGraph& og, int n_in, int n_out) {
  CanonicalClass cc = canonical_form(og);
  auto key = std::make_tuple(cc.key, n_in, n_out, cc.is_zero ? 0 : cc.sign);
  auto it = plans_.find(key);
  if (it != plans_.end()) return it->second;
  EvaluationPlan p;
  p.n_in = n_in;
  p.n_out = n_out;
  if (cc.is_zero) {
    p.zero = true;
    return plans_[key] = p;
  }
  OGraph gamma = GraphChain::graph_of(cc.key);
  const Graph& g = gamma.g;
  std::vector<int> black;
  for (int v = 0; v < g.nv(); ++v) {
    if (g.is_white(v)) throw ActionError("evaluate: graph has white vertices");
    black.push_back(v);
  }
  std::vector<int> vidx(g.nv(), -1), out_of(g.nv(), -1), slot(g.nh(), 0), owner(g.nh(), -1);
  std::vector<std::vector<int>> ins(g.nv());
  // outputs point towards the outgoing leaves along a spanning forest, so
  // trees never need the pairing
  std::vector<int> queue;
  for (int v : black)
    for (int h : g.cyc[v])
      if (g.is_leaf(h) && g.label[h] > n_in) {
        out_of[v] = h;
        queue.push_back(v);
        break;
      }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int h : g.cyc[queue[qi]]) {
      if (g.is_leaf(h)) continue;
      const int y = g.inv[h], u = g.src[y];
      if (out_of[u] >= 0) continue;
      out_of[u] = y;
      queue.push_back(u);
    }
  int K = 0;
  for (std::size_t i = 0; i < black.size(); ++i) {
    int v = black[i];
    vidx[v] = static_cast<int>(i) + 1;
    const auto& c = g.cyc[v];
    if (out_of[v] < 0) out_of[v] = c.back();
    const int o = out_of[v];
    int q = g.position(o);
    for (std::size_t s = 1; s < c.size(); ++s) {
      int h = c[(q + s) % c.size()];
      ins[v].push_back(h);
      slot[h] = ++K;
    }
    p.arity.push_back(static_cast<int>(c.size()) - 1);
    for (int h : c) owner[h] = v;
  }
  std::vector<std::pair<Ref, Ref>> da, dz;
  std::vector<std::pair<DegenKind, Ref>> da1, dz1;
  std::vector<DegenKind> da0;
  int R = 0;
  auto is_out = [&](int h) { return h == out_of[owner[h]]; };
  for (int h = 0; h < g.nh(); ++h) {
    const int v = owner[h];
    const int y = g.inv[h];
    const int L = g.label[h];
    if (g.is_leaf(h) && L == 0) throw ActionError("evaluate: unlabeled leaf");
    if (!is_out(h)) {
      Ref s{End::MIn, slot[h]};
      if (g.is_leaf(h) && L <= n_in) {
        da.push_back({{End::GIn, L}, s});
      } else if (g.is_leaf(h)) {
        ++R;
        da.push_back({s, {End::WIn, R}});
        dz.push_back({{End::WOut, R}, {End::GOut, L}});
      } else if (is_out(y)) {
        ++R;
        da.push_back({s, {End::WIn, R}});
        dz.push_back({{End::MOut, vidx[owner[y]]}, {End::WOut, R}});
      } else if (h < y) {
        da.push_back({s, {End::MIn, slot[y]}});
      }
    } else {
      Ref o{End::MOut, vidx[v]};
      if (g.is_leaf(h) && L > n_in) {
        dz.push_back({o, {End::GOut, L}});
      } else if (g.is_leaf(h)) {
        ++R;
        da.push_back({{End::GIn, L}, {End::WIn, R}});
        dz.push_back({o, {End::WOut, R}});
      } else if (is_out(y) && h < y) {
        dz.push_back({o, {End::MOut, vidx[owner[y]]}});
      }
    }
  }
  for (const auto& d : g.degen) {
    switch (d.kind) {
      case DegenKind::Circle:
      case DegenKind::Disk: da0.push_back(d.kind); break;
      case DegenKind::Single:
        if (d.a <= n_in) da1.push_back({d.kind, {End::GIn, d.a}});
        else dz1.push_back({d.kind, {End::GOut, d.a}});
        break;
      case DegenKind::Double: {
        int lo = std::min(d.a, d.b), hi = std::max(d.a, d.b);
        if (hi <= n_in) {
          da.push_back({{End::GIn, lo}, {End::GIn, hi}});
        } else if (lo > n_in) {
          dz.push_back({{End::GOut, lo}, {End::GOut, hi}});
        } else {
          ++R;
          da.push_back({{End::GIn, lo}, {End::WIn, R}});
          dz.push_back({{End::WOut, R}, {End::GOut, hi}});
        }
        break;
      }
    }
  }
  const int V = static_cast<int>(black.size());
  const int N = K + R;
  p.R = R;
  auto label_a = [&](Ref r) {
    switch (r.kind) {
      case End::GIn: return r.id;
      case End::MIn: return n_in + r.id;
      case End::WIn: return n_in + K + r.id;
      default: throw ActionError("evaluate: bad endpoint");
    }
  };
  auto label_z = [&](Ref r) {
    switch (r.kind) {
      case End::MOut: return r.id;
      case End::WOut: return V + r.id;
      case End::GOut: return V + R + (r.id - n_in);
      default: throw ActionError("evaluate: bad endpoint");
    }
  };
  auto make_double = [](int x, int y) { return Degenerate{DegenKind::Double, std::min(x, y), std::max(x, y)}; };
  for (auto& [x, y] : da) p.da.push_back(make_double(label_a(x), label_a(y)));
  for (auto& [k, x] : da1) p.da.push_back({k, label_a(x), 0});
  for (auto k : da0) p.da.push_back({k, 0, 0});
  for (auto& [x, y] : dz) p.dz.push_back(make_double(label_z(x), label_z(y)));
  for (auto& [k, x] : dz1) p.dz.push_back({k, label_z(x), 0});
  std::sort(p.da.begin(), p.da.end());
  std::sort(p.dz.begin(), p.dz.end());
  if (!a_.has_trace) {
    // without a trace only identity strands and units are available
    for (const auto& d : p.da)
      if (d.kind == DegenKind::Circle || d.kind == DegenKind::Disk || (d.kind == DegenKind::Single && d.a <= n_in) ||
          (d.kind == DegenKind::Double && (d.a > n_in) == (d.b > n_in)))
        throw ActionError("evaluate: graph needs the trace pairing");
    for (const auto& d : p.dz)
      if (d.kind == DegenKind::Circle || d.kind == DegenKind::Disk || (d.kind == DegenKind::Single && d.a <= V + R) ||
          (d.kind == DegenKind::Double && (d.a > V + R) == (d.b > V + R)))
        throw ActionError("evaluate: graph needs the trace pairing");
  }

  OGraph A, M, Z;
  A.g.degen = p.da;
  Z.g.degen = p.dz;
  int s = 0;
  for (int i = 0; i < V; ++i) {
    int v = M.g.add_vertex();
    M.o.word.push_back(vtok(v));
    for (int j = 0; j < p.arity[i]; ++j) M.o.word.push_back(htok(M.g.add_half_edge(v, ++s)));
    M.o.word.push_back(htok(M.g.add_half_edge(v, N + i + 1)));
  }
  for (int r = 1; r <= R; ++r) M.g.degen.push_back({DegenKind::Double, K + r, N + V + r});
  std::sort(M.g.degen.begin(), M.g.degen.end());
  auto t1 = compose_terms(A, M, {n_in, 0}, {N, 0}, {V + R, 0});
  if (t1.size() != 1) throw ActionError("evaluate: layer composition is not a single graph");
  auto t2 = compose_terms(t1[0], Z, {n_in, 0}, {V + R, 0}, {n_out, 0});
  if (t2.size() != 1) throw ActionError("evaluate: layer composition is not a single graph");
  CanonicalClass back = canonical_form(t2[0]);
  if (back.key != cc.key) throw ActionError("evaluate: layers do not reassemble the graph");
  // og = cc.sign * std, layers = back.sign * std
  p.sign = cc.sign * back.sign;
  if (back.is_zero) p.zero = true;
  if (a_.is_strict())
    for (int k : p.arity)
      if (k > 2) p.zero = true;
  return plans_[key] = p;
}

Tensor Evaluator::evaluate_degenerate(const std::vector<Degenerate>& ds, int n_in, int n_out,
                                      const std::vector<int>& x) const {
  using SortKey = std::array<int, 3>;
  struct Item {
    int basis;
    SortKey key;
  };
  std::vector<Item> base;
  for (int i = 0; i < n_in; ++i) base.push_back({x[i], {-1, 0, 0}});
  Rational scalar = 1;
  int pairs = 0, singles = 0;
  // inserted pieces: one alternative list per piece
  std::vector<std::vector<std::pair<std::vector<Item>, Rational>>> inserted;
  for (const auto& d : ds) {
    switch (d.kind) {
      case DegenKind::Circle: {
        Rational c = 0;
        for (auto& [w, v] : cop_) c += v * a_.pairing(w[0], w[1]);
        scalar *= c;
        break;
      }
      case DegenKind::Disk: scalar *= a_.tr(a_.unit); break;
      case DegenKind::Single:
        if (d.a <= n_in) {
          base[d.a - 1].key = {1, singles++, 0};
        } else {
          std::vector<std::pair<std::vector<Item>, Rational>> alt;
          for (auto& [i, c] : a_.unit) alt.push_back({{{i, {2, d.a, 0}}}, c});
          inserted.push_back(alt);
        }
        break;
      case DegenKind::Double:
        if (d.b <= n_in) {
          base[d.a - 1].key = {0, pairs, 0};
          base[d.b - 1].key = {0, pairs++, 1};
        } else if (d.a <= n_in) {
          base[d.a - 1].key = {2, d.b, 0};
        } else {
          std::vector<std::pair<std::vector<Item>, Rational>> alt;
          for (auto& [w, c] : cop_) alt.push_back({{{w[0], {2, d.a, 0}}, {w[1], {2, d.b, 0}}}, c});
          inserted.push_back(alt);
        }
        break;
    }
  }
  for (const auto& it : base)
    if (it.key[0] < 0) throw ActionError("evaluate: input not consumed by the degenerate graph");
  Tensor out;
  if (a_.norm(scalar) == 0) return out;
  std::vector<Item> items = base;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational coeff) {
    if (i == inserted.size()) {
      std::vector<int> perm(items.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::stable_sort(perm.begin(), perm.end(), [&](int p, int q) { return items[p].key < items[q].key; });
      int sign = 1;
      for (std::size_t p = 0; p < perm.size(); ++p)
        for (std::size_t q = p + 1; q < perm.size(); ++q)
          if (perm[p] > perm[q] && a_.deg(items[perm[p]].basis) % 2 && a_.deg(items[perm[q]].basis) % 2) sign = -sign;
      Rational c = coeff * sign;
      std::vector<int> word;
      std::size_t p = 0;
      while (p < perm.size() && c != 0) {
        const Item& it = items[perm[p]];
        if (it.key[0] == 0) {
          c *= a_.pairing(it.basis, items[perm[p + 1]].basis);
          p += 2;
        } else if (it.key[0] == 1) {
          c *= a_.tr(Vec{{it.basis, 1}});
          ++p;
        } else {
          word.push_back(it.basis);
          ++p;
        }
      }
      if (c != 0) {
        if (static_cast<int>(word.size()) != n_out) throw ActionError("evaluate: outputs not covered");
        add_to(out, word, c, a_);
      }
      return;
    }
    for (const auto& [its, c] : inserted[i]) {
      items.insert(items.end(), its.begin(), its.end());
      rec(i + 1, coeff * c);
      items.resize(items.size() - its.size());
    }
  };
  rec(0, scalar);
  return out;
}

Tensor Evaluator::apply_corollas(const EvaluationPlan& p, const std::vector<int>& y) const {
  Tensor out{{{}, 1}};
  std::size_t pos = 0;
  long long before = 0;
  for (int k : p.arity) {
    std::vector<int> block(y.begin() + pos, y.begin() + pos + k);
    pos += k;
    Vec r = a_.product(block);
    int s = parity_sign(static_cast<long long>(k - 2) * before);
    before += word_degree(a_, block);
    Tensor next;
    for (auto& [w, c] : out)
      for (auto& [i, x] : r) {
        auto u = w;
        u.push_back(i);
        add_to(next, u, c * x * s, a_);
      }
    out = std::move(next);
    if (out.empty()) return out;
  }
  Tensor res;
  for (auto& [w, c] : out) {
    auto u = w;
    u.insert(u.end(), y.begin() + pos, y.end());
    add_to(res, u, c, a_);
  }
  return res;
}

Tensor Evaluator::evaluate(const OGraph& g, int n_in, int n_out, const std::vector<int>& x) {
  return evaluate(g, n_in, n_out, Tensor{{x, 1}});
}

Tensor Evaluator::evaluate(const OGraph& g, int n_in, int n_out, const Tensor& x) {
  return run(plan(g, n_in, n_out), x);
}

Tensor Evaluator::run(const EvaluationPlan& p, const Tensor& x) const {
  const int n_in = p.n_in, n_out = p.n_out;
  Tensor out;
  if (p.zero) return out;
  const int K = std::accumulate(p.arity.begin(), p.arity.end(), 0);
  const int V = static_cast<int>(p.arity.size());
  for (auto& [w, c] : x) {
    if (static_cast<int>(w.size()) != n_in) throw ActionError("evaluate: input word has the wrong length");
    for (auto& [y, cy] : evaluate_degenerate(p.da, n_in, K + p.R, w))
      for (auto& [z, cz] : apply_corollas(p, y))
        for (auto& [u, cu] : evaluate_degenerate(p.dz, V + p.R, n_out, z)) add_to(out, u, c * cy * cz * cu * p.sign, a_);
  }
  return out;
}

MultiChain Evaluator::act(const OGraph& g, ObjectPair src, ObjectPair tgt, const MultiChain& x) {
  CanonicalClass cc = canonical_form(g);
  MultiChain out;
  if (cc.is_zero) return out;
  const int d = a_.dimension_d;
  for (auto& [ws, coeff] : x) {
    if (static_cast<int>(ws.size()) != src.n + 1) throw ActionError("act: expected one word per closed input plus opens");
    if (static_cast<int>(ws.back().size()) != src.m) throw ActionError("act: wrong number of open inputs");
    std::vector<int> ks;
    for (int i = 0; i < src.n; ++i) {
      if (ws[i].empty()) throw ActionError("act: empty Hochschild word");
      ks.push_back(static_cast<int>(ws[i].size()));
    }
    const int K = std::accumulate(ks.begin(), ks.end(), 0);
    auto tkey = std::make_tuple(cc.key, src, tgt, ks);
    auto it = terms_.find(tkey);
    if (it == terms_.end()) {
      OGraph L;
      int shift = 0;
      for (int i = 0; i < src.n; ++i) {
        L = disjoint_union(L, make_l_n(ks[i]), shift, i);
        shift += ks[i];
      }
      for (int j = 1; j <= src.m; ++j) L.g.degen.push_back({DegenKind::Double, K + j, K + src.m + j});
      std::sort(L.g.degen.begin(), L.g.degen.end());
      GraphChain comp = compose(L, GraphChain::graph_of(cc.key), {K + src.m, 0}, src, tgt, d, Ring::integers());
      std::vector<ActTerm> v;
      for (auto& [tk, t] : comp.terms()) {
        CutResult cut = cut_wheels(GraphChain::graph_of(tk), K + src.m, tgt.m);
        const int n_out = std::accumulate(cut.ks.begin(), cut.ks.end(), 0) + tgt.m;
        const EvaluationPlan& p = plan(cut.graph, K + src.m, n_out);
        if (!p.zero) v.push_back({&p, cut.ks, t});
      }
      it = terms_.emplace(tkey, std::move(v)).first;
    }
    const Tensor flat{{concat(ws), 1}};
    const Rational c0 = coeff * cc.sign * wheel_sign(a_, ws);
    for (auto& term : it->second) {
      const long long t = term.coeff;
      for (auto& [y, cy] : run(*term.plan, flat)) {
        MultiWord parts;
        std::size_t pos = 0;
        for (int k : term.ks) {
          parts.emplace_back(y.begin() + pos, y.begin() + pos + k);
          pos += k;
        }
        parts.emplace_back(y.begin() + pos, y.end());
        Rational c = a_.norm(c0 * t * cy * wheel_sign(a_, parts) + out[parts]);
        if (c == 0) out.erase(parts);
        else out[parts] = c;
      }
    }
  }
  return out;
}

HochschildChain Evaluator::ainf_differential(const HochschildChain& c) {
  HochschildChain out;
  for (auto& [w, coeff] : c) {
    const int n = static_cast<int>(w.size());
    int prefix = 0;
    for (int i = 0; i < n; ++i) {
      for (auto& [k, x] : a_.product({w[i]})) {
        auto u = w;
        u[i] = k;
        add_to(out, u, coeff * x * parity_sign(prefix), a_);
      }
      prefix += a_.deg(w[i]);
    }
    auto it = dl_.find(n);
    if (it == dl_.end()) {
      std::vector<std::pair<OGraph, long long>> fs;
      const GraphChain dl = differential(make_l_n(n), Ring::integers());
      for (auto& [k, t] : dl.terms()) {
        CutResult cut = cut_wheels(GraphChain::graph_of(k), n, 0);
        if (cut.ks.size() != 1) throw ActionError("ainf_differential: unexpected white vertices");
        fs.push_back({cut.graph, t});
      }
      it = dl_.emplace(n, std::move(fs)).first;
    }
    const int s = parity_sign(word_degree(a_, w));
    for (auto& [f, t] : it->second) {
      int k = f.g.num_labels() - n;
      for (auto& [y, cy] : evaluate(f, n, k, w)) add_to(out, y, coeff * cy * t * s, a_);
    }
  }
  return out;
}

namespace {

// mu_s on inputs i+1..i+s of n, identities on the rest
OGraph partial_corolla(int n, int i, int s) {
  OGraph r;
  int v = r.g.add_vertex();
  r.o.word.push_back(vtok(v));
  for (int j = i + 1; j <= i + s; ++j) r.o.word.push_back(htok(r.g.add_half_edge(v, j)));
  r.o.word.push_back(htok(r.g.add_half_edge(v, n + i + 1)));
  for (int j = 1; j <= i; ++j) r.g.degen.push_back({DegenKind::Double, j, n + j});
  for (int j = i + s + 1; j <= n; ++j) r.g.degen.push_back({DegenKind::Double, j, n + j - s + 1});
  std::sort(r.g.degen.begin(), r.g.degen.end());
  return r;
}

}  // namespace

ValidationReport Evaluator::validate_ainfinity(int max_arity) {
  ValidationReport rep;
  if (!a_.mu1.empty()) {
    rep.ok = false;
    rep.failure = "stasheff";
    rep.witness = "mu1 is not supported by the graph check";
    return rep;
  }
  for (int k = 3; k <= max_arity + 1; ++k) {
    // every two-vertex tree as mu_r o_i mu_s, so no internal edge is evaluated
    // through the pairing
    struct Split {
      OGraph inner, outer;
      int m;
      int sign;
    };
    std::map<Key, Split> splits;
    for (int sz = 2; sz < k; ++sz)
      for (int i = 0; i + sz <= k; ++i) {
        const int m = k - sz + 1;
        OGraph inner = partial_corolla(k, i, sz), outer = corolla(m);
        auto t = compose_terms(inner, outer, {k, 0}, {m, 0}, {1, 0});
        if (t.size() != 1) throw ActionError("validate_ainfinity: tree composite is not a single graph");
        CanonicalClass cc = canonical_form(t[0]);
        if (cc.is_zero) continue;
        splits[cc.key] = {inner, outer, m, cc.sign};
      }
    GraphChain dc = differential(corolla(k), Ring::integers());
    std::vector<std::vector<int>> inputs{{}};
    for (int i = 0; i < k; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& w : inputs)
        for (int j = 0; j < a_.dim(); ++j) {
          auto u = w;
          u.push_back(j);
          next.push_back(u);
        }
      inputs = std::move(next);
    }
    for (const auto& w : inputs) {
      Tensor total;
      for (auto& [key, t] : dc.terms()) {
        auto it = splits.find(key);
        if (it == splits.end()) throw ActionError("validate_ainfinity: unexpected term in d of a corolla");
        const Split& sp = it->second;
        Tensor mid = evaluate(sp.inner, k, sp.m, w);
        add_tensor(total, evaluate(sp.outer, sp.m, 1, mid), t * sp.sign, a_);
      }
      if (!total.empty()) {
        rep.ok = false;
        rep.failure = "stasheff";
        rep.witness = "arity " + std::to_string(k) + " on";
        for (int i : w) rep.witness += " " + a_.basis[i].name;
        return rep;
      }
    }
  }
  return rep;
}

OGraph corolla(int k) {
  OGraph r;
  int v = r.g.add_vertex();
  r.o.word.push_back(vtok(v));
  for (int i = 1; i <= k + 1; ++i) r.o.word.push_back(htok(r.g.add_half_edge(v, i)));
  return r;
}

namespace {

struct Builder {
  OGraph r;
  int vertex(int white = 0) {
    int v = r.g.add_vertex(white);
    r.o.word.push_back(vtok(v));
    return v;
  }
  int half(int v, int lab = 0) {
    int h = r.g.add_half_edge(v, lab);
    r.o.word.push_back(htok(h));
    return h;
  }
};

}  // namespace

OGraph product_graph() {
  Builder b;
  int v1 = b.vertex();
  b.half(v1, 1);
  int e1 = b.half(v1), e2 = b.half(v1);
  int v2 = b.vertex();
  int f1 = b.half(v2), f2 = b.half(v2), e3 = b.half(v2);
  int v3 = b.vertex();
  int f3 = b.half(v3);
  b.half(v3, 2);
  int e4 = b.half(v3);
  int w = b.vertex(1);
  int f4 = b.half(w);
  b.r.g.start[w] = f4;
  b.r.g.join(e1, f1);
  b.r.g.join(e2, f2);
  b.r.g.join(e3, f3);
  b.r.g.join(e4, f4);
  return b.r;
}

OGraph coproduct_graph() {
  Builder b;
  int v1 = b.vertex();
  b.half(v1, 1);
  int e1 = b.half(v1), e2 = b.half(v1);
  int w1 = b.vertex(1);
  int f1 = b.half(w1);
  int w2 = b.vertex(2);
  int f2 = b.half(w2);
  b.r.g.start[w1] = f1;
  b.r.g.start[w2] = f2;
  b.r.g.join(e1, f1);
  b.r.g.join(e2, f2);
  return b.r;
}

OGraph delta_graph() {
  Builder b;
  int w = b.vertex(1);
  int u = b.half(w);
  b.half(w, 1);
  b.r.g.start[w] = u;
  return b.r;
}

OGraph pants_o_graph() {
  Builder b;
  int v1 = b.vertex();
  b.half(v1, 1);
  int e1 = b.half(v1), e2 = b.half(v1);
  int v2 = b.vertex();
  int f2 = b.half(v2);
  b.half(v2, 2);
  int e3 = b.half(v2);
  int v3 = b.vertex();
  int f1 = b.half(v3), f3 = b.half(v3);
  b.half(v3, 3);
  b.r.g.join(e1, f1);
  b.r.g.join(e2, f2);
  b.r.g.join(e3, f3);
  return b.r;
}

HochschildChain closed_product(const Algebra& a, const std::vector<int>& x, const std::vector<int>& y) {
  HochschildChain out;
  if (x.size() != 1) return out;
  const int l = static_cast<int>(y.size()) - 1;
  const int ed = parity_sign(static_cast<long long>(a.dimension_d) * (word_degree(a, y) + l));
  for (auto& [w, c] : coproduct(a, x[0])) {
    const int s = koszul(a.deg(w[0]), a.deg(w[1])) * ed;
    Vec p = a.multiply(a.multiply(w[1], w[0]), Vec{{y[0], 1}});
    for (auto& [k, v] : p) {
      std::vector<int> u{k};
      u.insert(u.end(), y.begin() + 1, y.end());
      add_to(out, u, c * v * s, a);
    }
  }
  return out;
}

MultiChain closed_coproduct(const Algebra& a, const std::vector<int>& x) {
  MultiChain out;
  const int k = static_cast<int>(x.size()) - 1;
  const int s = parity_sign(static_cast<long long>(a.dimension_d) * (word_degree(a, x) - a.deg(x[0]) + k));
  for (auto& [w, c] : coproduct(a, x[0]))
    for (int i = 0; i <= k; ++i) {
      std::vector<int> p{w[1]}, q{w[0]};
      p.insert(p.end(), x.begin() + 1, x.begin() + 1 + i);
      q.insert(q.end(), x.begin() + 1 + i, x.end());
      MultiWord key{p, q, {}};
      Rational v = a.norm(out[key] + c * s);
      if (v == 0) out.erase(key);
      else out[key] = v;
    }
  return out;
}

Vec closed_pants(const Algebra& a, int x, int y) {
  Vec out;
  for (auto& [w, c] : coproduct(a, x)) {
    const int s = koszul(a.deg(y), a.dimension_d) * koszul(a.deg(w[0]), a.deg(w[1]));
    for (auto& [k, v] : a.multiply(a.multiply(w[1], w[0]), Vec{{y, 1}})) {
      Rational z = a.norm(out[k] + c * v * s);
      if (z == 0) out.erase(k);
      else out[k] = z;
    }
  }
  return out;
}

}  // namespace artifact
