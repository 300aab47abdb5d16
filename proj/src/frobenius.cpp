#include "artifact/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artifact {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt mod_pos(const BigInt& a, long long p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r;
}

BigInt inverse_mod(BigInt a, long long p) {
  // a^(p-2) mod p
  BigInt result = 1, base = mod_pos(a, p);
  long long e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::string word_names(const Algebra& a, const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + a.basis[w[i]].name;
  return s;
}

void add_vec(Vec& v, int i, const Rational& c, const Algebra& a) {
  Rational x = a.norm(v[i] + c);
  if (x == 0) v.erase(i);
  else v[i] = x;
}

// Inverse of the Gram matrix, or nullopt when it is singular over the ring.
std::optional<std::vector<std::vector<Rational>>> gram_inverse(const Algebra& a) {
  const int n = a.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.pairing(i, j);
    m[i][n + i] = 1;
  }
  auto red = [&](Rational x) { return a.ring.tag == Ring::Tag::PrimeField ? a.norm(x) : x; };
  auto inv = [&](const Rational& x) -> Rational {
    if (a.ring.tag == Ring::Tag::PrimeField) return Rational(inverse_mod(numerator(x), a.ring.p));
    return 1 / x;
  };
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(m[c], m[piv]);
    Rational s = inv(m[c][c]);
    for (auto& x : m[c]) x = red(x * s);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (int k = 0; k < 2 * n; ++k) m[r][k] = red(m[r][k] - f * m[c][k]);
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.ring.tag == Ring::Tag::Integers && denominator(m[i][n + j]) != 1) return std::nullopt;
      out[i][j] = m[i][n + j];
    }
  return out;
}

}  // namespace

Rational normalize(const Ring& r, const Rational& x) {
  switch (r.tag) {
    case Ring::Tag::Rationals: return x;
    case Ring::Tag::Integers:
      if (denominator(x) != 1) throw AlgebraError("non-integral coefficient over Z");
      return x;
    case Ring::Tag::PrimeField: {
      BigInt num = mod_pos(numerator(x), r.p);
      BigInt den = mod_pos(denominator(x), r.p);
      if (den == 0) throw AlgebraError("coefficient has denominator divisible by p");
      return Rational(num * inverse_mod(den, r.p) % r.p);
    }
  }
  return x;
}

int Algebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i].name == name) return i;
  throw AlgebraError("unknown basis element " + name);
}

Vec Algebra::multiply(int i, int j) const {
  auto it = mult.find({i, j});
  return it == mult.end() ? Vec{} : it->second;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  Vec out;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b)
      for (auto& [k, z] : multiply(i, j)) add_vec(out, k, x * y * z, *this);
  return out;
}

Vec Algebra::product(const std::vector<int>& inputs) const {
  const int k = static_cast<int>(inputs.size());
  if (k == 1) {
    auto it = mu1.find(inputs[0]);
    return it == mu1.end() ? Vec{} : it->second;
  }
  if (k == 2) return multiply(inputs[0], inputs[1]);
  auto it = mu.find(k);
  if (it == mu.end()) return {};
  auto jt = it->second.find(inputs);
  return jt == it->second.end() ? Vec{} : jt->second;
}

Rational Algebra::tr(const Vec& a) const {
  Rational s = 0;
  for (auto& [i, x] : a) {
    auto it = trace.find(i);
    if (it != trace.end()) s += x * it->second;
  }
  return norm(s);
}

std::optional<int> Algebra::unit_index() const {
  if (unit.size() == 1 && unit.begin()->second == 1) return unit.begin()->first;
  return std::nullopt;
}

bool Algebra::is_strict() const {
  for (auto& [k, m] : mu)
    for (auto& [in, v] : m)
      if (!v.empty()) return false;
  for (auto& [i, v] : mu1)
    if (!v.empty()) return false;
  return true;
}

int word_degree(const Algebra& a, const std::vector<int>& w) {
  int s = 0;
  for (int i : w) s += a.deg(i);
  return s;
}

void add_to(Tensor& t, const std::vector<int>& w, const Rational& c, const Algebra& a) {
  Rational x = a.norm(t[w] + c);
  if (x == 0) t.erase(w);
  else t[w] = x;
}

void add_tensor(Tensor& t, const Tensor& s, const Rational& c, const Algebra& a) {
  for (auto& [w, x] : s) add_to(t, w, x * c, a);
}

Tensor copairing(const Algebra& a) {
  auto inv = gram_inverse(a);
  if (!inv) throw AlgebraError("pairing is degenerate");
  Tensor t;
  for (int j = 0; j < a.dim(); ++j)
    for (int k = 0; k < a.dim(); ++k) {
      Rational c = (*inv)[j][k];
      if (c == 0) continue;
      add_to(t, {j, k}, c * koszul(a.dimension_d, a.deg(k)), a);
    }
  return t;
}

Tensor coproduct(const Algebra& a, int i) {
  Tensor out;
  for (auto& [w, c] : copairing(a))
    for (auto& [k, x] : a.multiply(w[1], i)) add_to(out, {w[0], k}, c * x, a);
  return out;
}

ValidationReport validate_frobenius(const Algebra& a) {
  ValidationReport rep;
  auto fail = [&](const std::string& what, const std::string& witness) {
    rep.ok = false;
    rep.failure = what;
    rep.witness = witness;
    return rep;
  };
  const int n = a.dim();
  for (auto& [ij, v] : a.mult)
    for (auto& [k, x] : v)
      if (x != 0 && a.deg(k) != a.deg(ij.first) + a.deg(ij.second))
        return fail("graded", word_names(a, {ij.first, ij.second}));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec l = a.multiply(a.multiply(i, j), Vec{{k, 1}});
        Vec r = a.multiply(Vec{{i, 1}}, a.multiply(j, k));
        if (l != r) return fail("associative", word_names(a, {i, j, k}));
      }
  for (auto& [i, x] : a.unit)
    if (a.deg(i) != 0) return fail("unit", "unit not in degree 0");
  for (int i = 0; i < n; ++i) {
    Vec e{{i, 1}};
    if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e) return fail("unit", a.basis[i].name);
  }
  for (auto& [i, x] : a.trace)
    if (x != 0 && a.deg(i) != a.dimension_d) return fail("trace degree", a.basis[i].name);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.pairing(i, j) != a.norm(koszul(a.deg(i), a.deg(j)) * a.pairing(j, i)))
        return fail("symmetric", word_names(a, {i, j}));
  if (!gram_inverse(a)) return fail("nondegenerate", "pairing matrix not invertible over " + a.ring.name());
  const Tensor cop = copairing(a);
  // nu(ab) = nu(a) b and nu(a) = (-1)^{d|a|} a 1' (x) 1''
  for (int i = 0; i < n; ++i) {
    Tensor left;
    for (auto& [w, c] : cop)
      for (auto& [k, x] : a.multiply(i, w[0])) add_to(left, {k, w[1]}, c * x * koszul(a.dimension_d, a.deg(i)), a);
    if (left != coproduct(a, i)) return fail("frobenius", a.basis[i].name);
    for (int j = 0; j < n; ++j) {
      Tensor lhs;
      for (auto& [k, x] : a.multiply(i, j)) add_tensor(lhs, coproduct(a, k), x, a);
      Tensor rhs;
      for (auto& [w, c] : coproduct(a, i))
        for (auto& [k, x] : a.multiply(w[1], j)) add_to(rhs, {w[0], k}, c * x, a);
      if (lhs != rhs) return fail("frobenius", word_names(a, {i, j}));
    }
  }
  return rep;
}

Algebra dual_numbers(Ring r) {
  Algebra a;
  a.ring = r;
  a.basis = {{"1", 0}, {"x", 0}};
  a.mult[{0, 0}] = {{0, 1}};
  a.mult[{0, 1}] = {{1, 1}};
  a.mult[{1, 0}] = {{1, 1}};
  a.unit = {{0, 1}};
  a.trace = {{1, 1}};
  a.dimension_d = 0;
  return a;
}

Algebra sphere_cohomology(int n, Ring r) {
  Algebra a;
  a.ring = r;
  a.basis = {{"1", 0}, {"x", n}};
  a.mult[{0, 0}] = {{0, 1}};
  a.mult[{0, 1}] = {{1, 1}};
  a.mult[{1, 0}] = {{1, 1}};
  a.unit = {{0, 1}};
  a.trace = {{1, 1}};
  a.dimension_d = n;
  return a;
}

Algebra exterior_two(Ring r) {
  Algebra a;
  a.ring = r;
  a.basis = {{"1", 0}, {"x", 1}, {"y", 1}, {"xy", 2}};
  for (int i = 0; i < 4; ++i) {
    a.mult[{0, i}] = {{i, 1}};
    a.mult[{i, 0}] = {{i, 1}};
  }
  a.mult[{1, 2}] = {{3, 1}};
  a.mult[{2, 1}] = {{3, a.norm(-1)}};
  a.unit = {{0, 1}};
  a.trace = {{3, 1}};
  a.dimension_d = 2;
  return a;
}

int chain_degree(const Algebra& a, const std::vector<int>& w) {
  return word_degree(a, w) + static_cast<int>(w.size()) - 1;
}

HochschildChain hochschild_differential(const Algebra& a, const HochschildChain& c) {
  HochschildChain out;
  for (auto& [w, coeff] : c) {
    const int n = static_cast<int>(w.size()) - 1;
    std::vector<int> prefix(n + 2, 0);
    for (int i = 0; i <= n; ++i) prefix[i + 1] = prefix[i] + a.deg(w[i]);
    for (int i = 0; i <= n; ++i) {
      for (auto& [k, x] : a.product({w[i]})) {
        auto u = w;
        u[i] = k;
        add_to(out, u, coeff * x * koszul(prefix[i], 1), a);
      }
    }
    const int total = prefix[n + 1];
    for (int i = 0; i < n; ++i) {
      int s = koszul(total, 1) * ((i + 1) % 2 ? -1 : 1);
      for (auto& [k, x] : a.multiply(w[i], w[i + 1])) {
        std::vector<int> u(w.begin(), w.begin() + i);
        u.push_back(k);
        u.insert(u.end(), w.begin() + i + 2, w.end());
        add_to(out, u, coeff * x * s, a);
      }
    }
    if (n >= 1) {
      const int an = a.deg(w[n]);
      long long e = n + 1 + static_cast<long long>(an + 1) * prefix[n] + an;
      int s = (e % 2) ? -1 : 1;
      for (auto& [k, x] : a.multiply(w[n], w[0])) {
        std::vector<int> u{k};
        u.insert(u.end(), w.begin() + 1, w.end() - 1);
        add_to(out, u, coeff * x * s, a);
      }
    }
  }
  return out;
}

HochschildChain reduce(const Algebra& a, const HochschildChain& c) {
  auto u = a.unit_index();
  if (!u) throw AlgebraError("reduced complex needs the unit as a basis element");
  HochschildChain out;
  for (auto& [w, x] : c)
    if (std::find(w.begin() + 1, w.end(), *u) == w.end()) out[w] = x;
  return out;
}

HochschildChain connes_B(const Algebra& a, const HochschildChain& c) {
  HochschildChain out;
  for (auto& [w, coeff] : c) {
    const int k = static_cast<int>(w.size()) - 1;
    const int total = word_degree(a, w);
    int head = 0;
    for (int i = 0; i <= k; ++i) {
      head += a.deg(w[i]);
      long long e = static_cast<long long>(head) * (total - head) + static_cast<long long>(i) * k;
      int s = (e % 2) ? -1 : 1;
      for (auto& [ui, ux] : a.unit) {
        std::vector<int> u{ui};
        u.insert(u.end(), w.begin() + i + 1, w.end());
        u.insert(u.end(), w.begin(), w.begin() + i + 1);
        add_to(out, u, coeff * ux * s, a);
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> all_words(const Algebra& a, int max_length) {
  std::vector<std::vector<int>> out, layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int i = 0; i < a.dim(); ++i) {
        auto u = w;
        u.push_back(i);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Cochain cup_product(const Algebra& a, const Cochain& f, const Cochain& g) {
  Cochain h;
  h.arity = f.arity + g.arity;
  h.degree = f.degree + g.degree;
  for (auto& [fin, fv] : f.values)
    for (auto& [gin, gv] : g.values) {
      std::vector<int> in = fin;
      in.insert(in.end(), gin.begin(), gin.end());
      Vec v = a.multiply(fv, gv);
      int s = koszul(g.degree, word_degree(a, fin));
      Vec& slot = h.values[in];
      for (auto& [k, x] : v) add_vec(slot, k, x * s, a);
      if (slot.empty()) h.values.erase(in);
    }
  return h;
}

Rational dualize(const Algebra& a, const Cochain& f, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != f.arity + 1) return 0;
  auto it = f.values.find(std::vector<int>(w.begin() + 1, w.end()));
  if (it == f.values.end()) return 0;
  return a.tr(a.multiply(Vec{{w[0], 1}}, it->second));
}

Rational evaluate_cochain_dual(const Algebra& a, const Cochain& f, const HochschildChain& c) {
  Rational s = 0;
  for (auto& [w, x] : c) s += x * dualize(a, f, w);
  return a.norm(s);
}

HomologyResult hochschild_homology(const Algebra& a, int max_length, bool reduced) {
  auto words = all_words(a, max_length);
  auto u = a.unit_index();
  if (reduced && !u) throw AlgebraError("reduced complex needs the unit as a basis element");
  std::map<int, std::vector<std::vector<int>>> by_deg;
  for (auto& w : words) {
    if (reduced && std::find(w.begin() + 1, w.end(), *u) != w.end()) continue;
    by_deg[chain_degree(a, w)].push_back(w);
  }
  std::map<std::vector<int>, int> index;
  ChainComplex cx;
  for (auto& [k, ws] : by_deg) {
    cx.dims[k] = static_cast<int>(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) index[ws[i]] = static_cast<int>(i);
  }
  for (auto& [k, ws] : by_deg) {
    if (!by_deg.count(k - 1)) continue;
    SparseMatrix m(cx.dims[k - 1], cx.dims[k]);
    for (std::size_t j = 0; j < ws.size(); ++j) {
      HochschildChain dc = hochschild_differential(a, {{ws[j], 1}});
      if (reduced) dc = reduce(a, dc);
      BigInt lcm = 1;
      for (auto& [w, x] : dc) lcm = boost::multiprecision::lcm(lcm, denominator(x));
      for (auto& [w, x] : dc) {
        auto it = index.find(w);
        if (it == index.end()) throw AlgebraError("hochschild_homology: term outside the truncation");
        m.add(it->second, static_cast<int>(j), static_cast<long long>(numerator(x) * (lcm / denominator(x))));
      }
    }
    cx.d[k] = std::move(m);
  }
  return homology(cx, a.ring);
}

}  // namespace artifact
