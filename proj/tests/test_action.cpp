#include <doctest.h>

#include <random>

#include "artifact/action.hpp"
#include "artifact/complexes.hpp"
#include "artifact/random_graphs.hpp"

using namespace artifact;

namespace {

void add_into(MultiChain& out, const MultiChain& x, const Rational& c, const Algebra& a) {
  for (auto& [w, v] : x) {
    Rational s = a.norm(out[w] + v * c);
    if (s == 0) out.erase(w);
    else out[w] = s;
  }
}

MultiChain act_chain(Evaluator& ev, const GraphChain& g, ObjectPair src, ObjectPair tgt, const MultiChain& x) {
  MultiChain out;
  for (auto& [k, c] : g.terms()) add_into(out, ev.act(GraphChain::graph_of(k), src, tgt, x), c, ev.algebra());
  return out;
}

// reduce every closed factor
MultiChain normalized(const Algebra& a, const MultiChain& x) {
  MultiChain out;
  for (auto& [ws, c] : x) {
    MultiChain cur{{ws, c}};
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
      MultiChain next;
      for (auto& [u, cu] : cur)
        for (auto& [r, cr] : reduce(a, {{u[i], 1}})) {
          MultiWord v = u;
          v[i] = r;
          add_into(next, {{v, cr}}, cu, a);
        }
      cur = std::move(next);
    }
    add_into(out, cur, 1, a);
  }
  return out;
}

// Hochschild differential on each closed factor with the Koszul sign of the
// factors before it
MultiChain boundary(const Algebra& a, const MultiChain& x) {
  MultiChain out;
  for (auto& [ws, c] : x) {
    long long before = 0;
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
      for (auto& [w, v] : hochschild_differential(a, {{ws[i], 1}})) {
        MultiWord u = ws;
        u[i] = w;
        add_into(out, {{u, v * koszul(before, 1)}}, c, a);
      }
      before += chain_degree(a, ws[i]);
    }
  }
  return out;
}

MultiChain random_input(const Algebra& a, std::mt19937_64& rng, ObjectPair src) {
  auto words = all_words(a, 3);
  MultiWord ws;
  for (int i = 0; i < src.n; ++i) ws.push_back(words[rng() % words.size()]);
  std::vector<int> open;
  for (int j = 0; j < src.m; ++j) open.push_back(static_cast<int>(rng() % a.dim()));
  ws.push_back(open);
  return {{ws, 1}};
}

MultiChain open_chain(const HochschildChain& c) {
  MultiChain m;
  for (auto& [w, x] : c) m[{w, {}}] = x;
  return m;
}

OGraph single_leaf(int label) {
  OGraph g;
  g.g.degen.push_back({DegenKind::Single, label, 0});
  return g;
}

}  // namespace

TEST_CASE("corollas evaluate to the product") {
  for (const Algebra& a : {dual_numbers(), sphere_cohomology(2), exterior_two(), sphere_cohomology(4)}) {
    Evaluator ev(a);
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        Tensor want;
        for (auto& [k, x] : a.multiply(i, j)) add_to(want, {k}, x, a);
        CHECK(ev.evaluate(corolla(2), 2, 1, std::vector<int>{i, j}) == want);
        CHECK(ev.evaluate(corolla(3), 3, 1, std::vector<int>{i, j, 0}).empty());
      }
  }
}

TEST_CASE("unit and trace graphs") {
  for (const Algebra& a : {dual_numbers(), sphere_cohomology(2)}) {
    Evaluator ev(a);
    for (int i = 0; i < a.dim(); ++i) {
      Tensor tr = ev.evaluate(single_leaf(1), 1, 0, std::vector<int>{i});
      Rational want = a.tr({{i, 1}});
      if (want == 0) CHECK(tr.empty());
      else CHECK(tr == Tensor{{{}, want}});
    }
    Tensor u;
    for (auto& [k, x] : a.unit) add_to(u, {k}, x, a);
    CHECK(ev.evaluate(single_leaf(1), 0, 1, std::vector<int>{}) == u);
  }
}

TEST_CASE("identity morphisms act as the identity") {
  for (const Algebra& a : {dual_numbers(), sphere_cohomology(2)}) {
    Evaluator ev(a);
    for (auto& w : all_words(a, 4)) {
      MultiChain x{{{w, {}}, 1}};
      CHECK(ev.act(identity_morphism({0, 1}), {0, 1}, {0, 1}, x) == x);
    }
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        MultiChain x{{{{i, j}}, 1}};
        CHECK(ev.act(identity_morphism({2, 0}), {2, 0}, {2, 0}, x) == x);
      }
  }
}

TEST_CASE("closed forms on small inputs") {
  Algebra a = dual_numbers();
  Evaluator ev(a);
  // Delta on a single letter is 1 (x) a0
  for (int i = 0; i < a.dim(); ++i)
    CHECK(ev.act(delta_graph(), {0, 1}, {0, 1}, {{{{i}, {}}, 1}}) == MultiChain{{{{0, i}, {}}, 1}});
  // product: a0 times b0 is the cyclic sum a0'' a0' b0 = 2 x b0 for Q[x]/x^2
  CHECK(ev.act(product_graph(), {0, 2}, {0, 1}, {{{{0}, {0}, {}}, 1}}) == MultiChain{{{{1}, {}}, 2}});
  CHECK(ev.act(product_graph(), {0, 2}, {0, 1}, {{{{1}, {0}, {}}, 1}}).empty());
  // first chain of length > 1 gives 0
  for (auto& w : all_words(a, 3))
    if (w.size() > 1) CHECK(ev.act(product_graph(), {0, 2}, {0, 1}, {{{w, {0}, {}}, 1}}).empty());
}

TEST_CASE("product and Delta closed forms also hold with odd elements") {
  Algebra a = exterior_two();
  Evaluator ev(a);
  int coproduct_mismatch = 0;
  for (auto& w : all_words(a, 3)) {
    CHECK(ev.act(delta_graph(), {0, 1}, {0, 1}, {{{w, {}}, 1}}) == open_chain(connes_B(a, {{w, 1}})));
    for (auto& v : all_words(a, 2))
      CHECK(ev.act(product_graph(), {0, 2}, {0, 1}, {{{w, v, {}}, 1}}) == open_chain(closed_product(a, w, v)));
    coproduct_mismatch += ev.act(coproduct_graph(), {0, 1}, {0, 2}, {{{w, {}}, 1}}) != closed_coproduct(a, w);
  }
  // the printed coproduct formula carries no Koszul signs for odd elements
  CHECK(coproduct_mismatch > 0);
}

TEST_CASE("act is a chain map and respects composition on the normalized complex") {
  std::mt19937_64 rng(91);
  for (const Algebra& a : {dual_numbers(), sphere_cohomology(2)}) {
    Evaluator ev(a);
    const int d = a.dimension_d;
    int chain_cases = 0, functor_cases = 0;
    for (int it = 0; it < 12000; ++it) {
      ObjectPair A{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
      ObjectPair B{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
      ObjectPair C{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)};
      if (A.m + A.n == 0 || B.m + B.n == 0 || C.m + C.n == 0) continue;
      RandomGraphOptions opt;
      opt.max_black = 2;
      opt.trivalent = it % 2;
      OGraph g1 = random_morphism(rng, A, B, opt), g2 = random_morphism(rng, B, C, opt);
      // outside positive boundary a unit can meet a trace, and the resulting
      // disk is the empty graph for d = 0 while tr(1) = 0 here
      if (!is_member(g1.g, Category::OCb, A, B) || !is_member(g2.g, Category::OCb, B, C)) continue;
      MultiChain x = normalized(a, random_input(a, rng, A));
      if (x.empty()) continue;

      const MultiChain once = normalized(a, ev.act(g1, A, B, x));
      const MultiChain lhs = normalized(a, act_chain(ev, compose(g1, g2, A, B, C, d, Ring::integers()), A, C, x));
      const MultiChain rhs = normalized(a, ev.act(g2, B, C, once));
      functor_cases += !lhs.empty() || !rhs.empty();
      CHECK(lhs == rhs);

      // d act(G) - (-1)^|G| act(G) d = act(dG)
      const int gd = twist_degree(g1.g, d, A.n + A.m + 1);
      MultiChain law = normalized(a, boundary(a, once));
      add_into(law, normalized(a, ev.act(g1, A, B, boundary(a, x))), -koszul(gd, 1), a);
      const MultiChain adg = normalized(a, act_chain(ev, differential(g1, Ring::integers()), A, B, x));
      chain_cases += !law.empty() || !adg.empty();
      CHECK(law == adg);
    }
    CHECK(functor_cases > 60);
    CHECK(chain_cases > 15);
  }
}

namespace {

OGraph swap_closed_inputs(const OGraph& g) {
  OGraph s = g;
  for (int& l : s.g.label)
    if (l == 1 || l == 2) l = 3 - l;
  return s;
}

MultiChain swap_first_two(const Algebra& a, const MultiChain& x) {
  MultiChain y;
  for (auto& [ws, c] : x) {
    MultiWord t = ws;
    std::swap(t[0], t[1]);
    y[t] = a.norm(c * koszul(chain_degree(a, ws[0]), chain_degree(a, ws[1])));
  }
  return y;
}

}  // namespace

TEST_CASE("permuting closed inputs matches relabeling the graph") {
  for (const Algebra& a : {dual_numbers(), sphere_cohomology(2)}) {
    Evaluator ev(a);
    const OGraph p = product_graph(), q = swap_closed_inputs(p);
    int nonzero = 0;
    for (auto& w : all_words(a, 3))
      for (auto& v : all_words(a, 3)) {
        MultiChain x{{{w, v, {}}, 1}};
        MultiChain l = ev.act(q, {0, 2}, {0, 1}, x);
        nonzero += !l.empty();
        CHECK(l == ev.act(p, {0, 2}, {0, 1}, swap_first_two(a, x)));
      }
    CHECK(nonzero > 5);
  }
  std::mt19937_64 rng(93);
  Algebra a = dual_numbers();
  Evaluator ev(a);
  int nonzero = 0;
  for (int it = 0; it < 1500; ++it) {
    ObjectPair A{static_cast<int>(rng() % 2), 2}, B{static_cast<int>(rng() % 2), 1};
    RandomGraphOptions opt;
    opt.max_black = 2;
    opt.trivalent = true;
    OGraph g = random_morphism(rng, A, B, opt);
    MultiChain x = random_input(a, rng, A);
    MultiChain l = ev.act(swap_closed_inputs(g), A, B, x);
    nonzero += !l.empty();
    CHECK(l == ev.act(g, A, B, swap_first_two(a, x)));
  }
  CHECK(nonzero > 5);
}

TEST_CASE("a unit glued to a trace") {
  // the composite is a disk, identified with the empty graph when d = 0
  Algebra a = dual_numbers();
  Evaluator ev(a);
  OGraph u = single_leaf(1), t = single_leaf(1);
  const GraphChain c = compose(u, t, {0, 0}, {1, 0}, {0, 0}, 0, Ring::integers());
  REQUIRE(c.size() == 1);
  CHECK(act_chain(ev, c, {0, 0}, {0, 0}, {{{{}}, 1}}) == MultiChain{{{{}}, 1}});
  CHECK(ev.act(t, {1, 0}, {0, 0}, ev.act(u, {0, 0}, {1, 0}, {{{{}}, 1}})).empty());
  // with d = 2 the disk is kept and evaluates to tr(1)
  Algebra s = sphere_cohomology(2);
  Evaluator es(s);
  const GraphChain c2 = compose(u, t, {0, 0}, {1, 0}, {0, 0}, 2, Ring::integers());
  CHECK(act_chain(es, c2, {0, 0}, {0, 0}, {{{{}}, 1}}).empty());
}

TEST_CASE("plans of one class with opposite orientations keep their own signs") {
  Algebra a = dual_numbers();
  Evaluator ev(a);
  OGraph g = corolla(2);
  OGraph h = g;
  std::swap(h.o.word[1], h.o.word[2]);
  Tensor x = ev.evaluate(g, 2, 1, std::vector<int>{1, 0});
  Tensor y = ev.evaluate(h, 2, 1, std::vector<int>{1, 0});
  REQUIRE(x.size() == 1);
  CHECK(y.begin()->second == -x.begin()->second);
  CHECK(ev.evaluate(g, 2, 1, std::vector<int>{1, 0}) == x);
}
