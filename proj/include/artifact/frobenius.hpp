#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artifact/chain.hpp"
#include "artifact/homology.hpp"

namespace artifact {

using Rational = boost::multiprecision::cpp_rational;

// Brings a rational into the canonical representative of the ring: integers
// must stay integral, F_p values are reduced to 0..p-1.
Rational normalize(const Ring& r, const Rational& x);

using Vec = std::map<int, Rational>;                  // sparse vector over the basis
using Tensor = std::map<std::vector<int>, Rational>;  // basis words

struct BasisElement {
  std::string name;
  int degree = 0;
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graded algebra data. Strict Frobenius algebras use mult, unit and trace;
// A-infinity data adds higher products mu[k] for k >= 3 and an optional mu1.
struct Algebra {
  Ring ring = Ring::rationals();
  std::vector<BasisElement> basis;
  std::map<std::pair<int, int>, Vec> mult;
  Vec unit;
  Vec trace;
  int dimension_d = 0;
  std::map<int, std::map<std::vector<int>, Vec>> mu;  // arity -> inputs -> output
  std::map<int, Vec> mu1;
  bool has_trace = true;

  int dim() const { return static_cast<int>(basis.size()); }
  int deg(int i) const { return basis[i].degree; }
  int index_of(const std::string& name) const;

  Rational norm(const Rational& x) const { return normalize(ring, x); }
  Vec multiply(int i, int j) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  // mu_k on basis inputs; k = 2 is mult, k = 1 is mu1
  Vec product(const std::vector<int>& inputs) const;
  Rational tr(const Vec& a) const;
  Rational pairing(int i, int j) const { return tr(multiply(i, j)); }
  std::optional<int> unit_index() const;  // when the unit is a basis element
  bool is_strict() const;
};

struct ValidationReport {
  bool ok = true;
  std::string failure;  // name of the failed axiom
  std::string witness;
};

ValidationReport validate_frobenius(const Algebra& a);
// sum c^{jk} e_j (x) e_k, the inverse of the pairing with Koszul correction
Tensor copairing(const Algebra& a);
// nu(a) = nu(1) a = sum a' (x) a''
Tensor coproduct(const Algebra& a, int i);

// Sign-aware helpers.
inline int koszul(long long a, long long b) { return ((a & 1) && (b & 1)) ? -1 : 1; }
int word_degree(const Algebra& a, const std::vector<int>& w);
void add_to(Tensor& t, const std::vector<int>& w, const Rational& c, const Algebra& a);
void add_tensor(Tensor& t, const Tensor& s, const Rational& c, const Algebra& a);

// Standard example algebras used by tests and the CLI.
Algebra dual_numbers(Ring r = Ring::rationals());  // Q[x]/x^2, |x| = 0, tr(x) = 1
Algebra sphere_cohomology(int n, Ring r = Ring::rationals());  // H*(S^n)
Algebra exterior_two(Ring r = Ring::rationals());  // H*(T^2) = Lambda(x, y)

// ---- Hochschild chains -------------------------------------------------

// A chain a_0 (x) ... (x) a_n is a word of length n+1 in total degree
// sum |a_i| + n.
using HochschildChain = Tensor;
int chain_degree(const Algebra& a, const std::vector<int>& w);

HochschildChain hochschild_differential(const Algebra& a, const HochschildChain& c);

// Projects slots 1..n to A/(ring . unit); needs the unit to be a basis element.
HochschildChain reduce(const Algebra& a, const HochschildChain& c);
HochschildChain connes_B(const Algebra& a, const HochschildChain& c);

// All basis words of length 1..max_length.
std::vector<std::vector<int>> all_words(const Algebra& a, int max_length);

// ---- Hochschild cochains ------------------------------------------------

struct Cochain {
  int arity = 0;
  std::map<std::vector<int>, Vec> values;  // inputs -> f(inputs)
  int degree = 0;                          // |f(a)| - sum |a_i|
};

Cochain cup_product(const Algebra& a, const Cochain& f, const Cochain& g);
// f~(a_0, ..., a_n) = <a_0, f(a_1, ..., a_n)>
Rational dualize(const Algebra& a, const Cochain& f, const std::vector<int>& w);
Rational evaluate_cochain_dual(const Algebra& a, const Cochain& f, const HochschildChain& c);

// Homology of the complex truncated to words of length <= max_length; only
// degrees below max_length - 1 are complete.
HomologyResult hochschild_homology(const Algebra& a, int max_length, bool reduced);

}  // namespace artifact
