#include "artifact/chain.hpp"

#include <stdexcept>

namespace artifact {

namespace {
bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
  return r;
}
}  // namespace

Ring Ring::prime_field(long long p) {
  if (!is_prime(p)) throw std::invalid_argument("prime field needs a prime, got " + std::to_string(p));
  return {Tag::PrimeField, p};
}

std::string Ring::name() const {
  switch (tag) {
    case Tag::Integers: return "Z";
    case Tag::Rationals: return "Q";
    case Tag::PrimeField: return "Fp:" + std::to_string(p);
  }
  return "?";
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  std::string num;
  if (s.rfind("Fp:", 0) == 0) num = s.substr(3);
  else if (s.size() > 1 && s[0] == 'F') num = s.substr(1);
  else throw std::invalid_argument("unknown ring '" + s + "'");
  std::size_t used = 0;
  long long p = std::stoll(num, &used);
  if (used != num.size()) throw std::invalid_argument("unknown ring '" + s + "'");
  return prime_field(p);
}

long long GraphChain::reduce(long long c) const {
  if (ring_.tag != Ring::Tag::PrimeField) return c;
  c %= ring_.p;
  if (c < 0) c += ring_.p;
  return c;
}

void GraphChain::add(const Key& k, long long c) {
  c = reduce(c);
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second = reduce(checked_add(it->second, c));
  if (it->second == 0) terms_.erase(it);
}

void GraphChain::add(const CanonicalClass& cc, long long c) {
  if (cc.is_zero) return;
  add(cc.key, checked_mul(c, cc.sign));
}

void GraphChain::add(const GraphChain& other, long long c) {
  for (const auto& [k, v] : other.terms_) add(k, checked_mul(v, c));
}

long long GraphChain::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? 0 : it->second;
}

GraphChain GraphChain::operator-() const {
  GraphChain r(ring_);
  r.add(*this, -1);
  return r;
}

OGraph GraphChain::graph_of(const Key& k) {
  OGraph og;
  og.g = decode(k);
  og.o = standard_orientation(og.g);
  return og;
}

GraphChain operator+(const GraphChain& a, const GraphChain& b) {
  GraphChain r = a;
  r.add(b, 1);
  return r;
}

GraphChain operator-(const GraphChain& a, const GraphChain& b) {
  GraphChain r = a;
  r.add(b, -1);
  return r;
}

}  // namespace artifact
