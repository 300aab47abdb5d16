#pragma once

#include <map>
#include <string>

#include "artifact/graph.hpp"

namespace artifact {

struct Ring {
  enum class Tag { Integers, Rationals, PrimeField };
  Tag tag = Tag::Integers;
  long long p = 0;

  static Ring integers() { return {}; }
  static Ring rationals() { return {Tag::Rationals, 0}; }
  static Ring prime_field(long long p);
  bool is_field() const { return tag != Tag::Integers; }
  std::string name() const;
  static Ring parse(const std::string& s);  // "Z", "Q", "Fp:5" or "F5"
  bool operator==(const Ring&) const = default;
};

// Finite combination of canonical graph classes, each taken with the standard
// orientation of its canonical ids.
class GraphChain {
 public:
  GraphChain() = default;
  explicit GraphChain(Ring r) : ring_(r) {}

  const Ring& ring() const { return ring_; }
  const std::map<Key, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, long long c);
  void add(const CanonicalClass& cc, long long c);
  void add(const OGraph& og, long long c) { add(canonical_form(og), c); }
  void add(const GraphChain& other, long long c = 1);
  long long coeff(const Key& k) const;

  GraphChain operator-() const;
  bool operator==(const GraphChain& o) const { return terms_ == o.terms_; }

  static OGraph graph_of(const Key& k);  // decoded with standard orientation

 private:
  long long reduce(long long c) const;
  Ring ring_;
  std::map<Key, long long> terms_;
};

GraphChain operator+(const GraphChain& a, const GraphChain& b);
GraphChain operator-(const GraphChain& a, const GraphChain& b);

}  // namespace artifact
