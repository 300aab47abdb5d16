#pragma once

#include <functional>
#include <string>
#include <vector>

#include "artifact/action.hpp"

namespace artifact {

// Basis of the null space of a dense matrix over a field (Q or F_p).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int ncols, const Ring& r);

// Hochschild cycles among words of one length, and cochains of one arity
// whose duals vanish on boundaries.
std::vector<HochschildChain> hochschild_cycles(const Algebra& a, int length);
std::vector<Cochain> hochschild_cocycles(const Algebra& a, int arity);

struct CheckResult {
  std::string name;
  bool ok = true;
  long long cases = 0;
  std::string detail;
};

struct BVReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct BVOptions {
  int max_length = 5;
  // Replaces the Delta operator read off the graph (used for mutation tests).
  std::function<HochschildChain(const HochschildChain&)> delta;
};

// B^2 = 0 and dB + Bd = 0 on the reduced complex, Delta against B, the
// A-infinity differential against the strict one, and the duality between
// the coproduct and the cup product with one global sign.
BVReport check_bv(Evaluator& ev, const BVOptions& opt = {});

}  // namespace artifact
