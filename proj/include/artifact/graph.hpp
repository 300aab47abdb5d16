#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

// Degenerate components carry no vertices and no orientation tokens. A Disk
// is a closed disk produced by capping; it only matters for twisted degrees.
enum class DegenKind : int { Single = 0, Double = 1, Circle = 2, Disk = 3 };

struct Degenerate {
  DegenKind kind = DegenKind::Single;
  int a = 0;  // label of the first end (Single, Double)
  int b = 0;  // label of the second end (Double)

  auto operator<=>(const Degenerate&) const = default;
};

// Half-edge black-and-white fat graph. Vertex v is white iff white[v] > 0, in
// which case white[v] is its label and start[v] its start half-edge.
struct Graph {
  std::vector<std::vector<int>> cyc;
  std::vector<int> white;
  std::vector<int> start;
  std::vector<int> src;
  std::vector<int> inv;
  std::vector<int> label;  // 0 = unlabeled
  std::vector<Degenerate> degen;

  int nv() const { return static_cast<int>(cyc.size()); }
  int nh() const { return static_cast<int>(src.size()); }
  bool is_white(int v) const { return white[v] > 0; }
  bool is_leaf(int h) const { return inv[h] == h; }
  int valence(int v) const { return static_cast<int>(cyc[v].size()); }
  int num_white() const;
  int num_labels() const;  // labels on leaves and on degenerates
  bool empty() const { return cyc.empty() && degen.empty(); }

  int add_vertex(int white_label = 0);
  int add_half_edge(int v, int lab = 0);  // appended to the cyclic order of v
  void join(int h1, int h2);

  // position of h in the cyclic order of its vertex
  int position(int h) const;
  int next(int h) const;  // sigma
  int prev(int h) const;

  bool operator==(const Graph&) const = default;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Orientation tokens: vertex v -> 2v, half-edge h -> 2h+1.
inline int vtok(int v) { return 2 * v; }
inline int htok(int h) { return 2 * h + 1; }
inline bool tok_is_vertex(int t) { return (t & 1) == 0; }
inline int tok_id(int t) { return t >> 1; }

struct OrientationWord {
  std::vector<int> word;
  int sign = 1;
};

// A graph together with an orientation.
struct OGraph {
  Graph g;
  OrientationWord o;
};

// Throws GraphError describing the first violated invariant. When
// require_mp is set, unlabeled leaves must be white start half-edges.
void validate(const Graph& g, bool require_mp = true);

std::vector<std::vector<int>> boundary_cycles(const Graph& g);
int degree(const Graph& g);

// vertices in id order, then half-edges in id order
std::vector<int> standard_word(const Graph& g);
OrientationWord standard_orientation(const Graph& g);

// Sign s such that from = s * to, as wedge words with their signs.
int reorder_sign(const OrientationWord& from, const OrientationWord& to);
// Parity (+1/-1) of the permutation given as a vector of distinct indices 0..n-1.
int permutation_sign(const std::vector<int>& perm);
// Rewrites word as front ++ rest (rest keeps its relative order); returns the
// sign of that rewriting. Every token of front must occur in word.
int move_to_front(const std::vector<int>& word, const std::vector<int>& front, std::vector<int>& rest);

OGraph make_l_n(int n);
// v1, h.., v2, h.. blocks, half-edges in cyclic order starting at cyc[v][0].
OrientationWord canonical_orientation_odd(const Graph& g);

// Connected components as lists of vertex ids (degenerates excluded).
std::vector<std::vector<int>> components(const Graph& g);

using Key = std::vector<int>;

// The canonical graph is decode(key): half-edges laid out vertex by vertex in
// cyclic order, oriented by its standard word.
struct CanonicalClass {
  Key key;
  int sign = 1;  // input orientation = sign * standard orientation of the canonical graph
  bool is_zero = false;
};

CanonicalClass canonical_form(const Graph& g, const OrientationWord& o);
inline CanonicalClass canonical_form(const OGraph& og) { return canonical_form(og.g, og.o); }

Graph canonical_graph(const CanonicalClass& cc);
// encode requires the vertex-by-vertex half-edge layout of canonical graphs.
Key encode(const Graph& g);
Graph decode(const Key& k);

// Removes vertices/half-edges flagged dead, compacting ids. Returns new ids
// (or -1) through vmap/hmap. Cyclic orders must not reference dead half-edges.
Graph compact(const Graph& g, const std::vector<char>& vdead, const std::vector<char>& hdead,
              std::vector<int>& vmap, std::vector<int>& hmap);
// Rewrites a word in old ids into new ids, dropping tokens mapped to -1.
std::vector<int> remap_word(const std::vector<int>& word, const std::vector<int>& vmap,
                            const std::vector<int>& hmap);

std::string to_string(const Graph& g);

}  // namespace artifact
