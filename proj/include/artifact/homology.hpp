#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "artifact/chain.hpp"

namespace artifact {

using BigInt = boost::multiprecision::cpp_int;

// Column-sparse integer matrix: cols[j] maps row index -> entry.
struct SparseMatrix {
  int rows = 0;
  int cols_count = 0;
  std::vector<std::map<int, long long>> cols;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols_count(c), cols(c) {}
  void add(int r, int c, long long v);
};

// Smith normal form data of an integer matrix: nonzero invariant factors,
// in divisibility order.
std::vector<BigInt> smith_invariants(const SparseMatrix& m);
int rank_mod_p(const SparseMatrix& m, long long p);

// C_k with boundary maps d_k : C_k -> C_{k-1}, given as rows x cols =
// dim C_{k-1} x dim C_k.
struct ChainComplex {
  std::map<int, int> dims;
  std::map<int, SparseMatrix> d;
};

struct HomologyGroup {
  long long rank = 0;
  std::vector<std::string> torsion;  // decimal invariant factors > 1
};

struct HomologyResult {
  Ring ring;
  std::map<int, HomologyGroup> groups;

  std::vector<long long> ranks(int lo, int hi) const;
  bool has_torsion() const;
};

HomologyResult homology(const ChainComplex& c, Ring r);

// Builds the complex spanned by the given graph classes, indexed by degree.
// d_of must return a chain supported on classes one degree lower; a term
// outside the basis throws GraphError.
ChainComplex graph_complex(const std::map<int, std::vector<Key>>& basis,
                           const std::function<GraphChain(const Key&)>& d_of);

}  // namespace artifact
