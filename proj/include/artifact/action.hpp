#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "artifact/categories.hpp"
#include "artifact/frobenius.hpp"

namespace artifact {

struct ActionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n closed inputs as Hochschild words followed by one word of open elements.
using MultiWord = std::vector<std::vector<int>>;
using MultiChain = std::map<MultiWord, Rational>;

// Phi(G) for an O-graph G in O(n_in, n_out) is read as D_Z o M o D_A: D_A and
// D_Z only hold degenerate pieces, M is a disjoint union of corollas and
// identity wires. The sign comes from composing the three layers back.
struct EvaluationPlan {
  bool zero = false;
  int n_in = 0, n_out = 0;
  int R = 0;                // identity wires through M
  std::vector<int> arity;   // inputs of each corolla, in vertex order
  std::vector<Degenerate> da, dz;
  int sign = 1;
};

class Evaluator {
 public:
  explicit Evaluator(Algebra a);

  const Algebra& algebra() const { return a_; }
  const Tensor& copairing_tensor() const { return cop_; }

  const EvaluationPlan& plan(const OGraph& g, int n_in, int n_out);
  Tensor evaluate(const OGraph& g, int n_in, int n_out, const Tensor& x);
  Tensor evaluate(const OGraph& g, int n_in, int n_out, const std::vector<int>& x);

  // Degenerate graph in O(n_in, n_out) applied to one basis word.
  Tensor evaluate_degenerate(const std::vector<Degenerate>& ds, int n_in, int n_out, const std::vector<int>& x) const;

  // Action of G in OC(src, tgt) (twisted by the algebra's dimension).
  MultiChain act(const OGraph& g, ObjectPair src, ObjectPair tgt, const MultiChain& x);

  // Hochschild differential read off from d(l_n).
  HochschildChain ainf_differential(const HochschildChain& c);

  // Stasheff relations: Phi(d c_k) = 0 for corollas c_k, k <= max_arity + 1.
  ValidationReport validate_ainfinity(int max_arity);

  std::size_t cached_plans() const { return plans_.size(); }

 private:
  Tensor apply_corollas(const EvaluationPlan& p, const std::vector<int>& y) const;
  Tensor run(const EvaluationPlan& p, const Tensor& x) const;

  // A term of the composite with the wheels cut off again.
  struct ActTerm {
    const EvaluationPlan* plan;
    std::vector<int> ks;
    long long coeff;
  };

  Algebra a_;
  Tensor cop_;
  // keyed by orientation sign too: the plan sign is relative to the given graph
  std::map<std::tuple<Key, int, int, int>, EvaluationPlan> plans_;
  std::map<std::tuple<Key, ObjectPair, ObjectPair, std::vector<int>>, std::vector<ActTerm>> terms_;
  std::map<int, std::vector<std::pair<OGraph, long long>>> dl_;
};

// Corolla in O(k, 1) oriented v ^ inputs ^ output.
OGraph corolla(int k);

// Graphs for the product, coproduct and Delta operator, oriented as the
// composition of their vertices in order.
OGraph product_graph();    // OC(0/2 -> 0/1)
OGraph coproduct_graph();  // OC(0/1 -> 0/2)
OGraph delta_graph();      // OC(0/1 -> 0/1)
OGraph pants_o_graph();    // O(2, 1) with three trivalent vertices

// Closed forms of the three operations on basis words.
HochschildChain closed_product(const Algebra& a, const std::vector<int>& x, const std::vector<int>& y);
MultiChain closed_coproduct(const Algebra& a, const std::vector<int>& x);
// (-1)^{|b| d + |a'||a''|} sum a'' a' b
Vec closed_pants(const Algebra& a, int x, int y);

}  // namespace artifact
