#include "artifact/bv.hpp"

#include <algorithm>
#include <set>

namespace artifact {

namespace {

Rational field_inverse(const Rational& x, const Ring& r) {
  if (r.tag != Ring::Tag::PrimeField) return 1 / x;
  // x^(p-2)
  Rational res = 1, base = x;
  for (long long e = r.p - 2; e > 0; e >>= 1) {
    if (e & 1) res = normalize(r, res * base);
    base = normalize(r, base * base);
  }
  return res;
}

std::vector<std::vector<int>> words_of_length(const Algebra& a, int len) {
  std::vector<std::vector<int>> out;
  for (auto& w : all_words(a, len))
    if (static_cast<int>(w.size()) == len) out.push_back(w);
  return out;
}

}  // namespace

bool BVReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int ncols, const Ring& r) {
  if (!r.is_field()) throw AlgebraError("nullspace needs a field");
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Rational inv = field_inverse(rows[rank][c], r);
    for (auto& x : rows[rank]) x = normalize(r, x * inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int k = 0; k < ncols; ++k) rows[i][k] = normalize(r, rows[i][k] - f * rows[rank][k]);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = normalize(r, -rows[i][f]);
    out.push_back(v);
  }
  return out;
}

std::vector<HochschildChain> hochschild_cycles(const Algebra& a, int length) {
  auto ws = words_of_length(a, length);
  std::map<std::vector<int>, int> row_of;
  std::vector<HochschildChain> images;
  for (auto& w : ws) {
    images.push_back(hochschild_differential(a, {{w, 1}}));
    for (auto& [z, c] : images.back()) row_of.emplace(z, 0);
  }
  int nr = 0;
  for (auto& [z, i] : row_of) i = nr++;
  std::vector<std::vector<Rational>> m(nr, std::vector<Rational>(ws.size(), 0));
  for (std::size_t j = 0; j < ws.size(); ++j)
    for (auto& [z, c] : images[j]) m[row_of[z]][j] = c;
  std::vector<HochschildChain> out;
  for (auto& v : nullspace(m, static_cast<int>(ws.size()), a.ring)) {
    HochschildChain c;
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (v[j] != 0) c[ws[j]] = v[j];
    out.push_back(c);
  }
  return out;
}

std::vector<Cochain> hochschild_cocycles(const Algebra& a, int arity) {
  // unknowns: (input word, output basis element)
  auto ins = arity == 0 ? std::vector<std::vector<int>>{{}} : words_of_length(a, arity);
  const int n = a.dim();
  std::map<std::vector<int>, int> col_of;
  for (std::size_t i = 0; i < ins.size(); ++i) col_of[ins[i]] = static_cast<int>(i);
  const int ncols = static_cast<int>(ins.size()) * n;
  std::vector<std::vector<Rational>> rows;
  for (auto& y : words_of_length(a, arity + 2)) {
    std::vector<Rational> row(ncols, 0);
    bool any = false;
    for (auto& [z, c] : hochschild_differential(a, {{y, 1}})) {
      int base = col_of.at(std::vector<int>(z.begin() + 1, z.end())) * n;
      for (int j = 0; j < n; ++j) {
        Rational t = a.pairing(z[0], j);
        if (t == 0) continue;
        row[base + j] = a.norm(row[base + j] + c * t);
        any = true;
      }
    }
    if (any) rows.push_back(row);
  }
  std::vector<Cochain> out;
  for (auto& v : nullspace(rows, ncols, a.ring)) {
    Cochain f;
    f.arity = arity;
    std::set<int> degs;
    for (std::size_t i = 0; i < ins.size(); ++i)
      for (int j = 0; j < n; ++j) {
        const Rational& x = v[i * n + j];
        if (x == 0) continue;
        f.values[ins[i]][j] = x;
        degs.insert(a.deg(j) - word_degree(a, ins[i]));
      }
    // split inhomogeneous solutions by degree
    for (int d : degs) {
      Cochain h;
      h.arity = arity;
      h.degree = d;
      for (auto& [in, val] : f.values)
        for (auto& [j, x] : val)
          if (a.deg(j) - word_degree(a, in) == d) h.values[in][j] = x;
      out.push_back(h);
    }
  }
  return out;
}

BVReport check_bv(Evaluator& ev, const BVOptions& opt) {
  const Algebra& a = ev.algebra();
  BVReport rep;
  const int N = opt.max_length;
  auto delta = opt.delta ? opt.delta : [&](const HochschildChain& c) {
    MultiChain in;
    for (auto& [w, x] : c) in[{w, {}}] = x;
    HochschildChain out;
    for (auto& [k, x] : ev.act(delta_graph(), {0, 1}, {0, 1}, in)) add_to(out, k[0], x, a);
    return out;
  };
  auto describe = [&](const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "|" : "") + a.basis[w[i]].name;
    return s;
  };

  CheckResult b2{"B^2 = 0 (reduced)", true, 0, ""}, chain{"dB + Bd = 0 (reduced)", true, 0, ""},
      dvb{"Delta = B", true, 0, ""}, oracle{"A-infinity differential = strict formula", true, 0, ""},
      dual{"coproduct dual to cup product", true, 0, ""};
  for (auto& w : all_words(a, N)) {
    HochschildChain c = reduce(a, {{w, 1}});
    if (!c.empty() && static_cast<int>(w.size()) <= N - 2) {
      ++b2.cases;
      if (b2.ok && !reduce(a, connes_B(a, reduce(a, connes_B(a, c)))).empty()) {
        b2.ok = false;
        b2.detail = describe(w);
      }
    }
    if (!c.empty() && static_cast<int>(w.size()) <= N - 1) {
      ++chain.cases;
      HochschildChain x = reduce(a, hochschild_differential(a, reduce(a, connes_B(a, c))));
      add_tensor(x, reduce(a, connes_B(a, reduce(a, hochschild_differential(a, c)))), 1, a);
      if (chain.ok && !x.empty()) {
        chain.ok = false;
        chain.detail = describe(w);
      }
    }
    if (static_cast<int>(w.size()) <= N - 1) {
      ++dvb.cases;
      if (dvb.ok && delta({{w, 1}}) != connes_B(a, {{w, 1}})) {
        dvb.ok = false;
        dvb.detail = describe(w);
      }
    }
    ++oracle.cases;
    if (oracle.ok && ev.ainf_differential({{w, 1}}) != hochschild_differential(a, {{w, 1}})) {
      oracle.ok = false;
      oracle.detail = describe(w);
    }
  }

  if (a.ring.is_field()) {
    std::map<int, std::vector<Cochain>> cocycles;
    for (int p = 0; p + 1 <= N; ++p) cocycles[p] = hochschild_cocycles(a, p);
    std::set<Rational> ratios;
    for (int len = 1; len <= N && dual.ok; ++len) {
      for (auto& x : hochschild_cycles(a, len)) {
        MultiChain in;
        for (auto& [w, c] : x) in[{w, {}}] = c;
        MultiChain nu = ev.act(coproduct_graph(), {0, 1}, {0, 2}, in);
        for (int p = 0; p <= len - 1; ++p) {
          const int q = len - 1 - p;
          for (auto& f : cocycles[p])
            for (auto& g : cocycles[q]) {
              Rational lhs = 0;
              for (auto& [k, c] : nu) lhs += c * dualize(a, f, k[0]) * dualize(a, g, k[1]);
              lhs = a.norm(lhs);
              Rational rhs = evaluate_cochain_dual(a, cup_product(a, f, g), x);
              ++dual.cases;
              if (rhs == 0 && lhs == 0) continue;
              if (rhs == 0 || lhs == 0) {
                dual.ok = false;
                dual.detail = "one side vanishes in length " + std::to_string(len);
                break;
              }
              ratios.insert(a.norm(lhs / rhs));
            }
        }
      }
    }
    if (dual.ok && ratios.size() > 1) {
      dual.ok = false;
      dual.detail = "sign is not global";
    }
    if (dual.ok && ratios.size() == 1) {
      Rational s = *ratios.begin();
      if (s != 1 && s != a.norm(-1)) {
        dual.ok = false;
        dual.detail = "ratio is not a sign";
      } else {
        dual.detail = s == 1 ? "sign +1" : "sign -1";
      }
    }
    if (dual.ok && ratios.empty()) dual.detail = "no nonzero pairing";
  } else {
    dual.ok = false;
    dual.detail = "duality needs a field";
  }
  rep.checks = {b2, chain, dvb, oracle, dual};
  return rep;
}

}  // namespace artifact
