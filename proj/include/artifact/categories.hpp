#pragma once

#include <map>
#include <string>
#include <vector>

#include "artifact/chain.hpp"
#include "artifact/graph.hpp"

namespace artifact {

// m open and n closed boundaries. Objects of O are pairs with n = 0.
struct ObjectPair {
  int m = 0;
  int n = 0;
  auto operator<=>(const ObjectPair&) const = default;
};

enum class Category { O, Ainf, AinfPlus, OC, SD, Ob, OCb, Ann };
std::string category_name(Category c);
Category parse_category(const std::string& s);

// Leaf labels of a morphism (m1/n1) -> (m2/n2): 1..n1 closed incoming,
// n1+1..n1+m1 open incoming, then m2 open outgoing. White vertices 1..n2.
struct Morphism {
  Category cat = Category::OC;
  ObjectPair source, target;
  int twist_d = 0;

  int first_out_label() const { return source.n + source.m + 1; }
  int num_labels() const { return source.n + source.m + target.m; }
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checks labels, white vertices and that closed incoming leaves are alone on
// their boundary cycles. Throws GraphError.
void check_morphism(const Graph& g, ObjectPair src, ObjectPair tgt);

// Terms of G2 o G1 before canonicalization (orientations included).
std::vector<OGraph> compose_terms(const OGraph& g1, const OGraph& g2, ObjectPair a, ObjectPair b, ObjectPair c);

// Composition in OC (O when all closed counts are 0). With twist_d != 0 each
// pair of generators carries the sign (-1)^{d |G2| chi(G1, out)}.
GraphChain compose(const GraphChain& g1, const GraphChain& g2, ObjectPair a, ObjectPair b, ObjectPair c,
                   int twist_d = 0);
GraphChain compose(const OGraph& g1, const OGraph& g2, ObjectPair a, ObjectPair b, ObjectPair c, int twist_d = 0,
                   Ring r = {});

// Disjoint union with orientation w(G) ^ w(H); labels of h are shifted by
// label_shift and white labels by white_shift.
OGraph disjoint_union(const OGraph& g, const OGraph& h, int label_shift, int white_shift);

OGraph identity_morphism(ObjectPair x);

// Untwisted morphisms identify a closed disk with the empty graph.
void strip_disks(Graph& g);

// chi(G, out) for outgoing leaves labeled >= first_out and all white vertices.
int euler_out(const Graph& g, int first_out);
int twist_degree(const Graph& g, int d, int first_out);
// (-1)^{d |G2| chi(G1,out)}
int twist_sign(const Graph& g1, const Graph& g2, int d, int first_out1);

struct ComponentType {
  int genus = 0;
  std::vector<std::vector<int>> boundaries;  // labels along each boundary cycle, minimal rotation
  std::vector<int> whites;

  auto operator<=>(const ComponentType&) const = default;
};
using TopologicalType = std::vector<ComponentType>;  // sorted

TopologicalType topological_type(const Graph& g);
std::string to_string(const TopologicalType& t);

bool is_member(const Graph& g, Category cat, ObjectPair src, ObjectPair tgt);

// Glues the outputs of an O-graph in O(m1, k1+..+kn+m2) onto wheels l_k.
OGraph attach_wheels(const OGraph& g, int m1, const std::vector<int>& ks, int m2);
struct CutResult {
  OGraph graph;         // in O(m1, k1+..+kn+m2)
  std::vector<int> ks;  // valences of the white vertices, in white-label order
};
// Inverse of attach_wheels on generators of OC(m1/0, m2/n).
CutResult cut_wheels(const OGraph& x, int m1, int m2);

}  // namespace artifact
