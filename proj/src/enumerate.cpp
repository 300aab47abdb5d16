#include "artifact/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace artifact {

namespace {

void involutions(int n, std::vector<int>& inv, int i, const std::function<void()>& f) {
  while (i < n && inv[i] >= 0) ++i;
  if (i == n) {
    f();
    return;
  }
  inv[i] = i;
  involutions(n, inv, i + 1, f);
  for (int j = i + 1; j < n; ++j) {
    if (inv[j] >= 0) continue;
    inv[i] = j;
    inv[j] = i;
    involutions(n, inv, i + 1, f);
    inv[j] = -1;
  }
  inv[i] = -1;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace

void for_each_raw_graph(const RawEnumOptions& opt, const std::function<void(const Graph&)>& f) {
  const int H = opt.half_edges;
  // white valences (ordered) then black valences (nonincreasing)
  std::vector<int> whites, blacks;
  std::function<void(int)> fill_blacks;
  auto emit_shape = [&]() {
    Graph base;
    for (std::size_t i = 0; i < whites.size(); ++i) {
      int v = base.add_vertex(static_cast<int>(i) + 1);
      for (int k = 0; k < whites[i]; ++k) base.add_half_edge(v);
    }
    for (int b : blacks) {
      int v = base.add_vertex(0);
      for (int k = 0; k < b; ++k) base.add_half_edge(v);
    }
    std::vector<int> inv(H, -1);
    involutions(H, inv, 0, [&]() {
      Graph g = base;
      g.inv = inv;
      if (opt.connected && !is_connected(g)) return;
      std::vector<int> leaves, optional;
      for (int h = 0; h < H; ++h) {
        if (inv[h] != h) continue;
        int v = g.src[h];
        if (g.is_white(v) && g.start[v] == h) optional.push_back(h);
        else leaves.push_back(h);
      }
      const int no = static_cast<int>(optional.size());
      for (int mask = 0; mask < (1 << no); ++mask) {
        std::vector<int> labeled = leaves;
        for (int k = 0; k < no; ++k)
          if (mask & (1 << k)) labeled.push_back(optional[k]);
        std::sort(labeled.begin(), labeled.end());
        std::vector<int> labs(labeled.size());
        std::iota(labs.begin(), labs.end(), 1);
        do {
          Graph t = g;
          std::fill(t.label.begin(), t.label.end(), 0);
          for (std::size_t k = 0; k < labeled.size(); ++k) t.label[labeled[k]] = labs[k];
          f(t);
        } while (opt.all_labelings && std::next_permutation(labs.begin(), labs.end()));
      }
    });
  };
  fill_blacks = [&](int remaining) {
    if (remaining == 0) {
      emit_shape();
      return;
    }
    int maxv = blacks.empty() ? remaining : std::min(remaining, blacks.back());
    for (int b = maxv; b >= 3; --b) {
      if (opt.black_trivalent && b != 3) continue;
      blacks.push_back(b);
      fill_blacks(remaining - b);
      blacks.pop_back();
    }
  };
  std::function<void(int)> fill_whites = [&](int remaining) {
    fill_blacks(remaining);
    if (static_cast<int>(whites.size()) >= opt.max_white) return;
    for (int w = 1; w <= remaining; ++w) {
      whites.push_back(w);
      fill_whites(remaining - w);
      whites.pop_back();
    }
  };
  fill_whites(H);
}

std::vector<Key> all_graph_classes(int max_half_edges, int max_white, bool connected, bool all_labelings) {
  std::set<Key> seen;
  for (int H = 0; H <= max_half_edges; ++H) {
    RawEnumOptions opt;
    opt.half_edges = H;
    opt.max_white = max_white;
    opt.connected = connected;
    opt.all_labelings = all_labelings;
    for_each_raw_graph(opt, [&](const Graph& g) {
      seen.insert(canonical_form(g, standard_orientation(g)).key);
    });
  }
  return {seen.begin(), seen.end()};
}

}  // namespace artifact
