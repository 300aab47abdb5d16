#include "artifact/io.hpp"

#include <fstream>
#include <sstream>

namespace artifact {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string token_string(int t) { return (tok_is_vertex(t) ? "v" : "h") + std::to_string(tok_id(t)); }

int token_from(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'v' && s[0] != 'h')) throw ParseError("bad orientation token " + s);
  int id = 0;
  try {
    std::size_t pos = 0;
    id = std::stoi(s.substr(1), &pos);
    if (pos != s.size() - 1 || id < 0) throw ParseError("bad orientation token " + s);
  } catch (const std::logic_error&) {
    throw ParseError("bad orientation token " + s);
  }
  return s[0] == 'v' ? vtok(id) : htok(id);
}

const char* kind_name(DegenKind k) {
  switch (k) {
    case DegenKind::Single: return "single";
    case DegenKind::Double: return "double";
    case DegenKind::Circle: return "circle";
    case DegenKind::Disk: return "disk";
  }
  return "?";
}

Vec vec_from(const Algebra& a, const Json& j) {
  Vec v;
  if (j.is_string()) {
    v[a.index_of(j.get<std::string>())] = 1;
    return v;
  }
  if (!j.is_object()) throw ParseError("algebra element must be a name or {name: coeff}");
  for (auto& [name, c] : j.items()) {
    Rational x = a.norm(coeff_from_json(c));
    if (x != 0) v[a.index_of(name)] = x;
  }
  return v;
}

Json vec_to(const Algebra& a, const Vec& v) {
  Json j = Json::object();
  for (auto& [i, c] : v) j[a.basis[i].name] = coeff_to_json(c);
  return j;
}

std::vector<int> names_to_word(const Algebra& a, const Json& j) {
  if (!j.is_array()) throw ParseError("word must be a list of basis names");
  std::vector<int> w;
  for (auto& x : j) {
    if (!x.is_string()) throw ParseError("word entries must be basis names");
    w.push_back(a.index_of(x.get<std::string>()));
  }
  return w;
}

Json word_to_names(const Algebra& a, const std::vector<int>& w) {
  Json j = Json::array();
  for (int i : w) j.push_back(a.basis[i].name);
  return j;
}

}  // namespace

Json coeff_to_json(const Rational& x) {
  if (denominator(x) == 1) {
    const auto n = numerator(x);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return static_cast<long long>(n);
    return n.str();
  }
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(BigInt(s));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in " + s);
      return Rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
      throw ParseError("bad coefficient " + s);
    }
  }
  throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

Json graph_to_json(const OGraph& og) {
  const Graph& g = og.g;
  Json j;
  j["format_version"] = kFormatVersion;
  Json vs = Json::array();
  for (int v = 0; v < g.nv(); ++v) {
    Json x;
    x["id"] = v;
    x["color"] = g.is_white(v) ? "white" : "black";
    if (g.is_white(v)) {
      x["label"] = g.white[v];
      x["start_half_edge"] = g.start[v];
    }
    vs.push_back(x);
  }
  j["vertices"] = vs;
  Json hs = Json::array();
  for (int h = 0; h < g.nh(); ++h) {
    Json x;
    x["id"] = h;
    x["source"] = g.src[h];
    x["partner"] = g.inv[h];
    if (g.label[h] != 0) x["label"] = g.label[h];
    hs.push_back(x);
  }
  j["half_edges"] = hs;
  Json cyc = Json::object();
  for (int v = 0; v < g.nv(); ++v) cyc[std::to_string(v)] = g.cyc[v];
  j["cyclic_orders"] = cyc;
  Json o = Json::array();
  for (int t : og.o.word) o.push_back(token_string(t));
  j["orientation"] = o;
  j["sign"] = og.o.sign;
  Json ds = Json::array();
  for (const auto& d : g.degen) {
    Json x;
    x["kind"] = kind_name(d.kind);
    if (d.kind == DegenKind::Single || d.kind == DegenKind::Double) x["a"] = d.a;
    if (d.kind == DegenKind::Double) x["b"] = d.b;
    ds.push_back(x);
  }
  j["degenerates"] = ds;
  return j;
}

OGraph graph_from_json(const Json& j) {
  OGraph og;
  Graph& g = og.g;
  const Json& vs = field(j, "vertices");
  const Json& hs = field(j, "half_edges");
  if (!vs.is_array() || !hs.is_array()) throw ParseError("vertices and half_edges must be lists");
  const int nv = static_cast<int>(vs.size()), nh = static_cast<int>(hs.size());
  g.cyc.assign(nv, {});
  g.white.assign(nv, 0);
  g.start.assign(nv, -1);
  g.src.assign(nh, -1);
  g.inv.assign(nh, -1);
  g.label.assign(nh, 0);
  std::vector<char> seen_v(nv, 0), seen_h(nh, 0);
  for (const auto& x : vs) {
    int v = as_int(field(x, "id"), "vertex id");
    if (v < 0 || v >= nv || seen_v[v]) throw ParseError("vertex ids must be 0..n-1 without repeats");
    seen_v[v] = 1;
    const Json& color = field(x, "color");
    if (color == "white") {
      g.white[v] = x.contains("label") ? as_int(x.at("label"), "white label") : 0;
      if (g.white[v] <= 0) throw ParseError("white vertex needs a positive label");
      g.start[v] = as_int(field(x, "start_half_edge"), "start_half_edge");
    } else if (color != "black") {
      throw ParseError("vertex color must be black or white");
    }
  }
  for (const auto& x : hs) {
    int h = as_int(field(x, "id"), "half-edge id");
    if (h < 0 || h >= nh || seen_h[h]) throw ParseError("half-edge ids must be 0..n-1 without repeats");
    seen_h[h] = 1;
    g.src[h] = as_int(field(x, "source"), "source");
    g.inv[h] = as_int(field(x, "partner"), "partner");
    if (g.src[h] < 0 || g.src[h] >= nv || g.inv[h] < 0 || g.inv[h] >= nh) throw ParseError("half-edge reference out of range");
    if (x.contains("label")) g.label[h] = as_int(x.at("label"), "label");
  }
  const Json& cyc = field(j, "cyclic_orders");
  if (!cyc.is_object()) throw ParseError("cyclic_orders must map vertex ids to lists");
  for (auto& [k, list] : cyc.items()) {
    int v = -1;
    try {
      v = std::stoi(k);
    } catch (const std::logic_error&) {
      throw ParseError("bad vertex key " + k);
    }
    if (v < 0 || v >= nv || std::to_string(v) != k) throw ParseError("bad vertex key " + k);
    if (!list.is_array()) throw ParseError("cyclic order must be a list");
    for (auto& h : list) g.cyc[v].push_back(as_int(h, "cyclic order entry"));
  }
  if (j.contains("degenerates")) {
    for (const auto& x : j.at("degenerates")) {
      const std::string kind = field(x, "kind").get<std::string>();
      Degenerate d;
      if (kind == "single") {
        d = {DegenKind::Single, as_int(field(x, "a"), "a"), 0};
      } else if (kind == "double") {
        d = {DegenKind::Double, as_int(field(x, "a"), "a"), as_int(field(x, "b"), "b")};
      } else if (kind == "circle") {
        d.kind = DegenKind::Circle;
      } else if (kind == "disk") {
        d.kind = DegenKind::Disk;
      } else {
        throw ParseError("unknown degenerate kind " + kind);
      }
      g.degen.push_back(d);
    }
  }
  if (j.contains("orientation")) {
    for (const auto& t : j.at("orientation")) {
      if (!t.is_string()) throw ParseError("orientation tokens are strings like v0, h3");
      og.o.word.push_back(token_from(t.get<std::string>()));
    }
    og.o.sign = j.contains("sign") ? as_int(j.at("sign"), "sign") : 1;
    if (og.o.sign != 1 && og.o.sign != -1) throw ParseError("sign must be 1 or -1");
  } else {
    og.o = standard_orientation(g);
  }
  try {
    validate(g, false);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
  std::vector<int> expect = standard_word(g), got = og.o.word;
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  if (expect != got) throw ParseError("orientation must list every vertex and half-edge once");
  return og;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["ring"] = a.ring.name();
  Json b = Json::array();
  for (const auto& e : a.basis) b.push_back({{"name", e.name}, {"degree", e.degree}});
  j["basis"] = b;
  Json m = Json::array();
  for (auto& [ij, v] : a.mult)
    for (auto& [k, c] : v) m.push_back({a.basis[ij.first].name, a.basis[ij.second].name, a.basis[k].name, coeff_to_json(c)});
  j["mult"] = m;
  j["unit"] = vec_to(a, a.unit);
  if (a.has_trace) j["trace"] = vec_to(a, a.trace);
  j["dimension_d"] = a.dimension_d;
  if (!a.mu.empty() || !a.mu1.empty()) {
    Json mu = Json::array();
    for (auto& [i, v] : a.mu1) mu.push_back({{"inputs", word_to_names(a, {i})}, {"output", vec_to(a, v)}});
    for (auto& [k, table] : a.mu)
      for (auto& [in, v] : table) mu.push_back({{"inputs", word_to_names(a, in)}, {"output", vec_to(a, v)}});
    j["mu"] = mu;
  }
  return j;
}

Algebra algebra_from_json(const Json& j) {
  Algebra a;
  try {
    a.ring = Ring::parse(field(j, "ring").get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad ring: ") + e.what());
  }
  for (const auto& e : field(j, "basis")) {
    BasisElement be;
    be.name = field(e, "name").get<std::string>();
    be.degree = as_int(field(e, "degree"), "degree");
    for (const auto& o : a.basis)
      if (o.name == be.name) throw ParseError("repeated basis name " + be.name);
    a.basis.push_back(be);
  }
  try {
    for (const auto& t : field(j, "mult")) {
      if (!t.is_array() || t.size() != 4) throw ParseError("mult entries are [left, right, result, coeff]");
      int x = a.index_of(t[0].get<std::string>()), y = a.index_of(t[1].get<std::string>());
      int z = a.index_of(t[2].get<std::string>());
      Rational c = a.norm(a.mult[{x, y}][z] + coeff_from_json(t[3]));
      if (c == 0) a.mult[{x, y}].erase(z);
      else a.mult[{x, y}][z] = c;
    }
    a.unit = vec_from(a, field(j, "unit"));
    if (j.contains("trace")) a.trace = vec_from(a, j.at("trace"));
    else a.has_trace = false;
    a.dimension_d = j.contains("dimension_d") ? as_int(j.at("dimension_d"), "dimension_d") : 0;
    if (j.contains("mu")) {
      for (const auto& e : j.at("mu")) {
        std::vector<int> in = names_to_word(a, field(e, "inputs"));
        Vec out = vec_from(a, field(e, "output"));
        if (in.size() == 1) a.mu1[in[0]] = out;
        else if (in.size() >= 3) a.mu[static_cast<int>(in.size())][in] = out;
        else throw ParseError("mu entries need arity 1 or >= 3 (arity 2 is mult)");
      }
    }
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return a;
}

Json chain_to_json(const Algebra& a, const HochschildChain& c) {
  Json j = Json::array();
  for (auto& [w, x] : c) j.push_back({{"word", word_to_names(a, w)}, {"coeff", coeff_to_json(x)}});
  return j;
}

HochschildChain chain_from_json(const Algebra& a, const Json& j) {
  if (!j.is_array()) throw ParseError("chain must be a list of {word, coeff}");
  HochschildChain c;
  try {
    for (const auto& t : j) {
      auto w = names_to_word(a, field(t, "word"));
      if (w.empty()) throw ParseError("Hochschild words are nonempty");
      add_to(c, w, coeff_from_json(t.contains("coeff") ? t.at("coeff") : Json(1)), a);
    }
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  }
  return c;
}

namespace {

// list of terms as written by multichain_to_json
MultiChain multichain_from_terms(const Algebra& a, const Json& terms) {
  if (!terms.is_array()) throw ParseError("terms must be an array");
  MultiChain out;
  for (const auto& t : terms) {
    MultiWord key;
    for (const auto& w : field(t, "chains")) key.push_back(names_to_word(a, w));
    key.push_back(names_to_word(a, field(t, "elements")));
    Rational z = a.norm(out[key] + a.norm(coeff_from_json(field(t, "coeff"))));
    if (z == 0) out.erase(key);
    else out[key] = z;
  }
  return out;
}

}  // namespace

MultiChain multichain_from_json(const Algebra& a, const Json& j) {
  if (j.is_array()) return multichain_from_terms(a, j);
  if (j.contains("terms")) return multichain_from_terms(a, j.at("terms"));
  MultiChain acc{{MultiWord{}, 1}};
  const Json chains = j.contains("chains") ? j.at("chains") : Json::array();
  for (const auto& cj : chains) {
    HochschildChain c = chain_from_json(a, cj);
    MultiChain next;
    for (auto& [k, x] : acc)
      for (auto& [w, y] : c) {
        auto u = k;
        u.push_back(w);
        next[u] += x * y;
      }
    acc = std::move(next);
  }
  std::vector<Vec> elems;
  try {
    if (j.contains("elements"))
      for (const auto& e : j.at("elements")) elems.push_back(vec_from(a, e));
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  }
  MultiChain out;
  for (auto& [k, x] : acc) {
    std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, x}};
    for (const auto& v : elems) {
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (auto& [w, c] : partial)
        for (auto& [i, y] : v) {
          auto u = w;
          u.push_back(i);
          next.push_back({u, c * y});
        }
      partial = std::move(next);
    }
    for (auto& [w, c] : partial) {
      auto key = k;
      key.push_back(w);
      Rational z = a.norm(out[key] + c);
      if (z == 0) out.erase(key);
      else out[key] = z;
    }
  }
  return out;
}

Json multichain_to_json(const Algebra& a, const MultiChain& m) {
  Json terms = Json::array();
  for (auto& [k, x] : m) {
    Json chains = Json::array();
    for (std::size_t i = 0; i + 1 < k.size(); ++i) chains.push_back(word_to_names(a, k[i]));
    terms.push_back({{"chains", chains}, {"elements", word_to_names(a, k.back())}, {"coeff", coeff_to_json(x)}});
  }
  return terms;
}

Json homology_to_json(const HomologyResult& h) {
  Json j = Json::object();
  for (auto& [deg, g] : h.groups) j[std::to_string(deg)] = {{"rank", g.rank}, {"torsion", g.torsion}};
  return j;
}

ObjectPair parse_object(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw ParseError("object must be m/n, got " + s);
  try {
    std::size_t p1 = 0, p2 = 0;
    int m = std::stoi(s.substr(0, slash), &p1);
    int n = std::stoi(s.substr(slash + 1), &p2);
    if (p1 != slash || p2 != s.size() - slash - 1 || m < 0 || n < 0) throw ParseError("object must be m/n, got " + s);
    return {m, n};
  } catch (const std::logic_error&) {
    throw ParseError("object must be m/n, got " + s);
  }
}

std::string object_string(ObjectPair x) { return std::to_string(x.m) + "/" + std::to_string(x.n); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace artifact
