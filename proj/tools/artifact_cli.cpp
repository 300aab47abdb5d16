// artifact: command-line front end for the graph complexes and the action on
// Hochschild chains. Exit codes: 0 ok, 1 domain failure, 2 parse error,
// 3 resource bound.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "artifact/bv.hpp"
#include "artifact/components.hpp"
#include "artifact/io.hpp"

using namespace artifact;

namespace {

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string category = "OC";
  std::string source, target;
  int genus = -1;
  int twist_d = 0;
  bool twist_given = false;
  int max_half_edges = 24;
  int max_length = 5;
  std::string ring;
  std::uint64_t seed = 20240601;
  std::string out;
  std::vector<std::string> files;
  std::string request;
};

void emit(const Options& o, const Json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw DomainFailure("cannot write " + o.out);
  f << j.dump(2) << "\n";
}

Ring parse_ring(const std::string& s) {
  try {
    return Ring::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad ring: ") + e.what());
  }
}

Algebra load_algebra(const Options& o, const Json& j) {
  Algebra a = algebra_from_json(j);
  if (!o.ring.empty()) {
    a.ring = parse_ring(o.ring);
    for (auto& [ij, v] : a.mult)
      for (auto& [k, c] : v) c = a.norm(c);
    for (auto* v : {&a.unit, &a.trace})
      for (auto& [k, c] : *v) c = a.norm(c);
  }
  return a;
}

int cmd_validate(const Options& o) {
  if (o.files.size() != 1) throw ParseError("algebra-validate takes one algebra file");
  Algebra a = load_algebra(o, read_json_file(o.files[0]));
  Json j;
  j["format_version"] = kFormatVersion;
  ValidationReport rep;
  if (a.is_strict()) {
    j["kind"] = "frobenius";
    if (!a.has_trace) throw ParseError("a strict algebra needs a trace");
    rep = validate_frobenius(a);
  } else {
    j["kind"] = "a-infinity";
    int top = 2;
    for (auto& [k, m] : a.mu) top = std::max(top, k);
    Evaluator ev(a);
    rep = ev.validate_ainfinity(top);
    if (rep.ok && a.has_trace) rep = validate_frobenius(a);
  }
  j["valid"] = rep.ok;
  if (!rep.ok) {
    j["failure"] = rep.failure;
    j["witness"] = rep.witness;
  }
  emit(o, j);
  return rep.ok ? 0 : 1;
}

Component load_component(const Options& o, SullivanQuotient& sq, Category& cat, ObjectPair& src, ObjectPair& tgt) {
  cat = parse_category(o.category);
  if (cat != Category::OC && cat != Category::SD) throw DomainFailure("components are computed for OC and SD only");
  if (o.source.empty() || o.target.empty()) throw ParseError("--source and --target are required");
  src = parse_object(o.source);
  tgt = parse_object(o.target);
  OGraph seed = component_seed(src, tgt, std::max(o.genus, 0));
  return enumerate_component(seed, cat, src, tgt, o.max_half_edges, sq);
}

int cmd_homology(const Options& o) {
  SullivanQuotient sq;
  Category cat;
  ObjectPair src, tgt;
  Component c = load_component(o, sq, cat, src, tgt);
  Ring r = o.ring.empty() ? Ring::integers() : parse_ring(o.ring);
  HomologyResult h = component_homology(c, r, sq, o.twist_d);
  Json j;
  j["format_version"] = kFormatVersion;
  j["category"] = category_name(cat);
  j["source"] = object_string(src);
  j["target"] = object_string(tgt);
  j["genus"] = std::max(o.genus, 0);
  j["ring"] = r.name();
  j["type"] = to_string(c.type);
  Json sizes = Json::object();
  for (auto& [d, ks] : c.basis) sizes[std::to_string(d)] = ks.size();
  j["basis_sizes"] = sizes;
  j["homology"] = homology_to_json(h);
  emit(o, j);
  return 0;
}

int cmd_enumerate(const Options& o) {
  SullivanQuotient sq;
  Category cat;
  ObjectPair src, tgt;
  Component c = load_component(o, sq, cat, src, tgt);
  Json j;
  j["format_version"] = kFormatVersion;
  j["category"] = category_name(cat);
  j["source"] = object_string(src);
  j["target"] = object_string(tgt);
  j["type"] = to_string(c.type);
  j["graphs_visited"] = c.graphs_visited;
  Json basis = Json::object();
  for (auto& [d, ks] : c.basis) {
    Json list = Json::array();
    for (const auto& k : ks) list.push_back(graph_to_json(GraphChain::graph_of(k)));
    basis[std::to_string(d)] = list;
  }
  j["basis"] = basis;
  emit(o, j);
  return 0;
}

int cmd_act(const Options& o) {
  Json gj, aj, ij;
  if (!o.request.empty()) {
    Json req = read_json_file(o.request);
    if (!req.contains("graph") || !req.contains("algebra") || !req.contains("inputs"))
      throw ParseError("request needs graph, algebra and inputs");
    gj = req.at("graph");
    aj = req.at("algebra");
    ij = req.at("inputs");
    if (req.contains("twist_d")) {
      if (!req.at("twist_d").is_number_integer()) throw ParseError("twist_d must be an integer");
      if (req.at("twist_d").get<int>() != aj.value("dimension_d", 0))
        throw DomainFailure("twist_d must equal the algebra's dimension_d");
    }
  } else {
    if (o.files.size() != 3) throw ParseError("act takes GRAPH ALGEBRA INPUTS (or --request)");
    gj = read_json_file(o.files[0]);
    aj = read_json_file(o.files[1]);
    ij = read_json_file(o.files[2]);
  }
  OGraph g = graph_from_json(gj);
  Algebra a = load_algebra(o, aj);
  if (o.twist_given && o.twist_d != a.dimension_d) throw DomainFailure("--twist-d must equal the algebra's dimension_d");
  std::string s = !o.source.empty() ? o.source : gj.value("source", "");
  std::string t = !o.target.empty() ? o.target : gj.value("target", "");
  if (s.empty() || t.empty()) throw ParseError("source and target objects are required (--source/--target)");
  ObjectPair src = parse_object(s), tgt = parse_object(t);
  try {
    check_morphism(g.g, src, tgt);
  } catch (const GraphError& e) {
    throw DomainFailure(std::string("graph is not a morphism ") + s + " -> " + t + ": " + e.what());
  }
  MultiChain x = multichain_from_json(a, ij);
  for (auto& [k, c] : x)
    if (static_cast<int>(k.size()) != src.n + 1 || static_cast<int>(k.back().size()) != src.m)
      throw DomainFailure("inputs do not match the source object");
  Evaluator ev(a);
  MultiChain y = ev.act(g, src, tgt, x);
  Json j;
  j["format_version"] = kFormatVersion;
  j["source"] = s;
  j["target"] = t;
  j["terms"] = multichain_to_json(a, y);
  emit(o, j);
  return 0;
}

int cmd_check_bv(const Options& o) {
  if (o.files.size() != 1) throw ParseError("check-bv takes one algebra file");
  Algebra a = load_algebra(o, read_json_file(o.files[0]));
  if (!a.ring.is_field()) throw DomainFailure("check-bv needs an algebra over a field");
  ValidationReport v = validate_frobenius(a);
  if (!v.ok) throw DomainFailure("algebra is not Frobenius: " + v.failure + " at " + v.witness);
  Evaluator ev(a);
  BVOptions opt;
  opt.max_length = o.max_length;
  BVReport rep = check_bv(ev, opt);
  // seeded spot check on random combinations of words
  CheckResult lin{"B linear on random chains", true, 0, ""};
  std::mt19937_64 rng(o.seed);
  auto words = all_words(a, std::max(1, o.max_length - 2));
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int s = 0; s < 100; ++s) {
    HochschildChain c;
    for (int t = 0; t < 4; ++t) add_to(c, words[pick(rng)], coeff(rng), a);
    HochschildChain sum;
    for (auto& [w, x] : c) add_tensor(sum, connes_B(a, {{w, 1}}), x, a);
    ++lin.cases;
    if (connes_B(a, c) != sum) lin.ok = false;
  }
  rep.checks.push_back(lin);
  Json j;
  j["format_version"] = kFormatVersion;
  j["max_length"] = o.max_length;
  j["seed"] = o.seed;
  Json cs = Json::array();
  for (auto& c : rep.checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}, {"detail", c.detail}});
  j["checks"] = cs;
  j["ok"] = rep.ok();
  emit(o, j);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph complexes, Sullivan diagrams and the action on Hochschild chains"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "Z, Q or Fp:p");
    s->add_option("--out", o.out, "write JSON here instead of stdout");
    s->add_option("--seed", o.seed, "seed for randomized checks");
  };
  auto objects = [&](CLI::App* s) {
    s->add_option("--category", o.category, "OC or SD");
    s->add_option("--source", o.source, "source object m/n");
    s->add_option("--target", o.target, "target object m/n");
    s->add_option("--genus", o.genus, "genus of the component");
    s->add_option("--max-half-edges", o.max_half_edges, "enumeration bound")->check(CLI::PositiveNumber);
    s->add_option("--twist-d", o.twist_d, "twisting degree d");
  };
  auto* val = app.add_subcommand("algebra-validate", "check the Frobenius or A-infinity axioms");
  val->add_option("file", o.files, "algebra JSON")->required();
  common(val);
  auto* hom = app.add_subcommand("complex-homology", "homology of a component of OC or SD");
  objects(hom);
  common(hom);
  auto* en = app.add_subcommand("enumerate", "list the generators of a component");
  objects(en);
  common(en);
  auto* act = app.add_subcommand("act", "apply a graph to Hochschild chains");
  act->add_option("files", o.files, "GRAPH ALGEBRA INPUTS");
  act->add_option("--request", o.request, "operation request JSON");
  objects(act);
  common(act);
  auto* bv = app.add_subcommand("check-bv", "BV and duality checks on the Hochschild complex");
  bv->add_option("file", o.files, "algebra JSON")->required();
  bv->add_option("--max-length", o.max_length, "longest Hochschild word")->check(CLI::PositiveNumber);
  common(bv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  o.twist_given = false;
  for (auto* s : {hom, en, act})
    if (s->parsed() && s->count("--twist-d")) o.twist_given = true;
  try {
    if (val->parsed()) return cmd_validate(o);
    if (hom->parsed()) return cmd_homology(o);
    if (en->parsed()) return cmd_enumerate(o);
    if (act->parsed()) return cmd_act(o);
    if (bv->parsed()) return cmd_check_bv(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
