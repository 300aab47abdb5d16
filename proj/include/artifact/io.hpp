#pragma once

#include <json.hpp>
#include <string>

#include "artifact/action.hpp"
#include "artifact/homology.hpp"

namespace artifact {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json graph_to_json(const OGraph& g);
OGraph graph_from_json(const Json& j);

// Coefficients are written as integers when integral, otherwise "p/q".
Json coeff_to_json(const Rational& x);
Rational coeff_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

// [{"word": [names], "coeff": c}, ...]
Json chain_to_json(const Algebra& a, const HochschildChain& c);
HochschildChain chain_from_json(const Algebra& a, const Json& j);

// {"chains": [chain, ...], "elements": [{name: coeff}, ...]} expanded as a
// tensor product of its factors.
MultiChain multichain_from_json(const Algebra& a, const Json& j);
Json multichain_to_json(const Algebra& a, const MultiChain& m);

Json homology_to_json(const HomologyResult& h);

ObjectPair parse_object(const std::string& s);  // "m/n"
std::string object_string(ObjectPair x);

Json read_json_file(const std::string& path);

}  // namespace artifact
