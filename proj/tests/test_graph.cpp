#include <doctest.h>

#include "artifact/categories.hpp"
#include "artifact/random_graphs.hpp"
#include "test_util.hpp"

#include <numeric>

using namespace artifact;
using testutil::black_corolla;

TEST_CASE("boundary cycles of small graphs") {
  OGraph c = black_corolla({1, 2, 3});
  auto cyc = boundary_cycles(c.g);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].size() == 3);

  // one vertex, leaf l then a loop (a, b)
  Graph g;
  int v = g.add_vertex();
  int l = g.add_half_edge(v, 1), a = g.add_half_edge(v), b = g.add_half_edge(v);
  g.join(a, b);
  auto bc = boundary_cycles(g);
  REQUIRE(bc.size() == 2);
  CHECK(bc[0] == std::vector<int>{l, a});
  CHECK(bc[1] == std::vector<int>{b});

  // disjoint union concatenates
  OGraph u = disjoint_union(c, c, 3, 0);
  CHECK(boundary_cycles(u.g).size() == 2);
}

TEST_CASE("degrees") {
  for (int n = 1; n <= 6; ++n) CHECK(degree(make_l_n(n).g) == n - 1);
  CHECK(degree(black_corolla({1, 2, 3}).g) == 0);
  CHECK(degree(black_corolla({1, 2, 3, 4}).g) == 1);
}

TEST_CASE("l_n") {
  OGraph l1 = make_l_n(1);
  CHECK(l1.g.nv() == 1);
  CHECK(l1.g.is_white(0));
  CHECK(l1.g.nh() == 1);
  CHECK(l1.g.label[0] == 1);
  CHECK(l1.g.start[0] == 0);
  for (int n = 1; n <= 5; ++n) {
    CanonicalClass cc = canonical_form(make_l_n(n));
    CHECK_FALSE(cc.is_zero);
    CHECK(cc.sign == 1);
  }
}

TEST_CASE("reorder_sign against an inversion count") {
  OrientationWord w{{0, 1, 2, 3}, 1};
  CHECK(reorder_sign(w, w) == 1);
  CHECK(reorder_sign({{1, 0, 2, 3}, 1}, w) == -1);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    std::vector<int> x(8);
    std::iota(x.begin(), x.end(), 0);
    std::shuffle(x.begin(), x.end(), rng);
    std::vector<int> y = x;
    std::shuffle(y.begin(), y.end(), rng);
    int want = testutil::inversion_sign(x) * testutil::inversion_sign(y);
    CHECK(reorder_sign({x, 1}, {y, 1}) == want);
    CHECK(reorder_sign({x, -1}, {y, 1}) == -want);
  }
}

TEST_CASE("canonical orientation for odd valences") {
  OGraph c = black_corolla({1, 2, 3});
  OrientationWord o = canonical_orientation_odd(c.g);
  CHECK(o.word == std::vector<int>{vtok(0), htok(0), htok(1), htok(2)});

  // two trivalent vertices listed in either order give the same word up to an even permutation
  Graph g;
  int v = g.add_vertex(), w = g.add_vertex();
  g.add_half_edge(v, 1);
  g.add_half_edge(v, 2);
  int e = g.add_half_edge(v);
  int f = g.add_half_edge(w);
  g.add_half_edge(w, 3);
  g.add_half_edge(w, 4);
  g.join(e, f);
  OrientationWord o1 = canonical_orientation_odd(g);
  std::mt19937_64 rng(3);
  OGraph r = testutil::relabel({g, o1}, rng);
  OrientationWord o2 = canonical_orientation_odd(r.g);
  CHECK(reorder_sign(r.o, o2) == 1);

  CHECK_THROWS_AS(canonical_orientation_odd(black_corolla({1, 2, 3, 4}).g), GraphError);
}

TEST_CASE("canonical form: odd swap negates, relabeling is invisible") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    OGraph g = random_mp_graph(rng, 2 + static_cast<int>(rng() % 9), 2);
    CanonicalClass c0 = canonical_form(g);
    OGraph r = testutil::relabel(g, rng);
    CanonicalClass c1 = canonical_form(r);
    CHECK(c0.key == c1.key);
    CHECK(c0.is_zero == c1.is_zero);
    if (!c0.is_zero) CHECK(c0.sign == c1.sign);
    if (g.o.word.size() >= 2 && !c0.is_zero) {
      OGraph s = g;
      std::swap(s.o.word[0], s.o.word[1]);
      CHECK(canonical_form(s).sign == -c0.sign);
    }
    // idempotent
    if (!c0.is_zero) {
      OGraph cg = GraphChain::graph_of(c0.key);
      CanonicalClass c2 = canonical_form(cg);
      CHECK(c2.key == c0.key);
      CHECK(c2.sign == 1);
    }
  }
}

namespace {

// Brute-force search for an orientation-reversing automorphism: every vertex
// permutation and every rotation of every cyclic order.
bool has_reversing_automorphism(const OGraph& og) {
  const Graph& g = og.g;
  const int nv = g.nv();
  std::vector<int> pv(nv);
  std::iota(pv.begin(), pv.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v)
      ok = g.valence(v) == g.valence(pv[v]) && g.white[v] == g.white[pv[v]];
    if (!ok) continue;
    std::vector<int> rot(nv, 0);
    while (true) {
      std::vector<int> ph(g.nh(), -1);
      for (int v = 0; v < nv; ++v) {
        const int k = g.valence(v);
        for (int i = 0; i < k; ++i) ph[g.cyc[v][i]] = g.cyc[pv[v]][(i + rot[v]) % k];
      }
      bool iso = true;
      for (int h = 0; h < g.nh() && iso; ++h)
        iso = ph[g.inv[h]] == g.inv[ph[h]] && g.label[h] == g.label[ph[h]];
      for (int v = 0; v < nv && iso; ++v)
        if (g.is_white(v)) iso = ph[g.start[v]] == g.start[pv[v]];
      if (iso) {
        OrientationWord image = og.o;
        for (int& t : image.word) t = tok_is_vertex(t) ? vtok(pv[tok_id(t)]) : htok(ph[tok_id(t)]);
        if (reorder_sign(image, og.o) == -1) found = true;
      }
      int v = 0;
      while (v < nv && ++rot[v] == g.valence(v)) rot[v++] = 0;
      if (v == nv) break;
    }
  } while (!found && std::next_permutation(pv.begin(), pv.end()));
  return found;
}

}  // namespace

TEST_CASE("orientation-reversing automorphisms make a class zero") {
  // theta graph: two trivalent vertices, three edges
  Graph g;
  int v = g.add_vertex(), w = g.add_vertex();
  std::vector<int> a, b;
  for (int i = 0; i < 3; ++i) a.push_back(g.add_half_edge(v));
  for (int i = 0; i < 3; ++i) b.push_back(g.add_half_edge(w));
  for (int i = 0; i < 3; ++i) g.join(a[i], b[2 - i]);
  OGraph theta{g, standard_orientation(g)};
  CHECK(canonical_form(theta).is_zero == has_reversing_automorphism(theta));

  std::mt19937_64 rng(23);
  int zeros = 0, checked = 0;
  for (int it = 0; it < 3000 && checked < 400; ++it) {
    OGraph og = random_mp_graph(rng, 2 * (1 + static_cast<int>(rng() % 6)), 2);
    if (og.g.nv() == 0 || og.g.nv() > 5 || !og.g.degen.empty()) continue;
    bool leafless = true;
    for (int h = 0; h < og.g.nh(); ++h)
      if (og.g.is_leaf(h)) leafless = false;
    if (!leafless && it % 2) continue;
    ++checked;
    bool z = has_reversing_automorphism(og);
    zeros += z;
    CHECK(canonical_form(og).is_zero == z);
  }
  CHECK(checked >= 400);
  CHECK(zeros > 0);
}

TEST_CASE("involution and parity invariants on random graphs") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 500; ++it) {
    OGraph og = random_mp_graph(rng, 1 + static_cast<int>(rng() % 12), 3);
    const Graph& g = og.g;
    std::size_t total = 0;
    for (auto& c : boundary_cycles(g)) total += c.size();
    CHECK(total == static_cast<std::size_t>(g.nh()));
    for (int h = 0; h < g.nh(); ++h) {
      CHECK(g.inv[g.inv[h]] == h);
      CHECK((g.inv[h] == h) == g.is_leaf(h));
    }
    if (g.nv() > 0) {
      // (-1)^deg = (-1)^(|V| + |H|)
      CHECK((degree(g) + g.nv() + g.nh()) % 2 == 0);
    }
    OGraph r = testutil::relabel(og, rng);
    CHECK(boundary_cycles(r.g).size() == boundary_cycles(g).size());
    CHECK(degree(r.g) == degree(g));
    OGraph u = disjoint_union(og, r, 0, 0);
    CHECK(degree(u.g) == 2 * degree(g));
  }
}

TEST_CASE("validate rejects broken graphs") {
  Graph g;
  int v = g.add_vertex();
  g.add_half_edge(v, 1);
  g.add_half_edge(v, 2);
  CHECK_THROWS_AS(validate(g), GraphError);  // bivalent black vertex
  g.add_half_edge(v, 2);
  CHECK_THROWS_AS(validate(g), GraphError);  // repeated label
  Graph w;
  int u = w.add_vertex(1);
  w.add_half_edge(u, 0);
  w.add_half_edge(u, 0);
  CHECK_THROWS_AS(validate(w), GraphError);  // unlabeled non-start leaf
  CHECK_NOTHROW(validate(w, false));
}
