#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "artifact/io.hpp"
#include "artifact/random_graphs.hpp"

using namespace artifact;

namespace {

const std::string kCli = ARTIFACT_CLI;
const std::string kData = ARTIFACT_TEST_DATA;

struct Run {
  int code;
  std::string out;
};

// runs the CLI with stdout captured in a temporary file
Run run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out = "artifact_io_test_" + std::to_string(counter++) + ".json";
  const int st = std::system((kCli + " " + args + " > " + out + " 2> /dev/null").c_str());
  Run r{WIFEXITED(st) ? WEXITSTATUS(st) : -1, ""};
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(out.c_str());
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::vector<Algebra> algebras() {
  return {dual_numbers(), sphere_cohomology(2), exterior_two(), sphere_cohomology(3),
          dual_numbers(Ring::parse("F5"))};
}

}  // namespace

TEST_CASE("graph JSON round trips bit-exactly") {
  std::mt19937_64 rng(5);
  const std::vector<std::pair<ObjectPair, ObjectPair>> objects = {
      {{0, 1}, {0, 1}}, {{2, 0}, {1, 0}}, {{1, 1}, {0, 2}}, {{0, 3}, {1, 1}}, {{2, 1}, {2, 0}}};
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    auto [s, t] = objects[it % objects.size()];
    OGraph g = random_morphism(rng, s, t);
    Json j = graph_to_json(g);
    const std::string text = j.dump();
    OGraph back = graph_from_json(Json::parse(text));
    CHECK(graph_to_json(back).dump() == text);
    CHECK(back.g == g.g);
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("algebra, chain and multichain round trips") {
  std::mt19937_64 rng(8);
  for (const Algebra& a : algebras()) {
    const std::string text = algebra_to_json(a).dump();
    Algebra b = algebra_from_json(Json::parse(text));
    CHECK(algebra_to_json(b).dump() == text);
    CHECK(validate_frobenius(b).ok);

    auto words = all_words(a, 3);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int s = 0; s < 20; ++s) {
      HochschildChain c;
      for (int t = 0; t < 3; ++t) add_to(c, words[pick(rng)], coeff(rng), a);
      CHECK(chain_from_json(a, Json::parse(chain_to_json(a, c).dump())) == c);

      MultiChain m;
      m[{words[pick(rng)], words[pick(rng)], {}}] = a.norm(coeff(rng));
      m[{words[pick(rng)], words[pick(rng)], {0, 1}}] = a.norm(Rational(coeff(rng), 3));
      for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
      CHECK(multichain_from_json(a, Json::parse(multichain_to_json(a, m).dump())) == m);
    }
  }
}

TEST_CASE("rational coefficients") {
  CHECK(coeff_from_json(Json::parse("\"3/4\"")) == Rational(3, 4));
  CHECK(coeff_from_json(Json::parse("-2")) == Rational(-2));
  CHECK(coeff_from_json(coeff_to_json(Rational(-7, 9))) == Rational(-7, 9));
  CHECK(coeff_from_json(coeff_to_json(Rational(5))) == Rational(5));
  CHECK_THROWS_AS(coeff_from_json(Json::parse("\"1/0\"")), ParseError);
  CHECK_THROWS_AS(coeff_from_json(Json::parse("\"abc\"")), ParseError);
  CHECK_THROWS_AS(coeff_from_json(Json::parse("1.5")), ParseError);
}

TEST_CASE("parse errors") {
  const Algebra a = dual_numbers();
  Json good = algebra_to_json(a);

  Json j = good;
  j.erase("unit");
  CHECK_THROWS_AS(algebra_from_json(j), ParseError);

  j = good;
  j["mult"].push_back(Json::array({"x", "z", "x", 1}));
  CHECK_THROWS_AS(algebra_from_json(j), ParseError);

  j = good;
  j["basis"].push_back({{"name", "x"}, {"degree", 0}});
  CHECK_THROWS_AS(algebra_from_json(j), ParseError);

  j = good;
  j["trace"]["x"] = "1/0";
  CHECK_THROWS_AS(algebra_from_json(j), ParseError);

  CHECK_THROWS_AS(chain_from_json(a, Json::parse(R"([{"word":["y"],"coeff":1}])")), ParseError);

  Json g = graph_to_json(product_graph());
  g.erase("vertices");
  CHECK_THROWS_AS(graph_from_json(g), ParseError);

  CHECK_THROWS_AS(parse_object("x/1"), ParseError);
  CHECK_THROWS_AS(parse_object("1"), ParseError);
  CHECK_THROWS_AS(parse_object("-1/0"), ParseError);
}

TEST_CASE("bad orientation token") {
  Json g = graph_to_json(product_graph());
  REQUIRE(g.contains("orientation"));
  Json bad = g;
  bad["orientation"] = Json::array({"nonsense"});
  CHECK_THROWS_AS(graph_from_json(bad), ParseError);
}

TEST_CASE("object strings") {
  for (ObjectPair x : {ObjectPair{0, 0}, ObjectPair{2, 1}, ObjectPair{0, 3}, ObjectPair{11, 4}}) {
    ObjectPair y = parse_object(object_string(x));
    CHECK(y.m == x.m);
    CHECK(y.n == x.n);
  }
  CHECK(object_string({2, 1}) == "2/1");
}

TEST_CASE("cli exit codes") {
  Run r = run_cli("algebra-validate " + data("dual_numbers.json"));
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("format_version") == kFormatVersion);
  CHECK(Json::parse(r.out).at("valid") == true);

  r = run_cli("algebra-validate " + data("nonassociative.json"));
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out).at("failure") == "associative");

  CHECK(run_cli("algebra-validate " + data("malformed.json")).code == 2);
  CHECK(run_cli("algebra-validate " + data("no_such_file.json")).code == 2);
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("complex-homology --category OC --source a/b --target 1/0").code == 2);

  CHECK(run_cli("complex-homology --category OC --source 0/4 --target 1/0 --max-half-edges 12").code == 3);
  CHECK(run_cli("enumerate --category OC --source 0/4 --target 1/0 --max-half-edges 12").code == 3);
}

TEST_CASE("cli homology output") {
  Run r = run_cli("complex-homology --category OC --source 0/2 --target 0/1 --genus 0");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("format_version") == kFormatVersion);
}

TEST_CASE("cli act matches the library") {
  Run r = run_cli("act " + data("product_graph.json") + " " + data("dual_numbers.json") + " " +
                  data("product_inputs.json"));
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("format_version") == kFormatVersion);

  const Algebra a = algebra_from_json(read_json_file(data("dual_numbers.json")));
  const Json gj = read_json_file(data("product_graph.json"));
  Evaluator ev(a);
  MultiChain x = multichain_from_json(a, read_json_file(data("product_inputs.json")));
  MultiChain y = ev.act(graph_from_json(gj), parse_object(gj.at("source")), parse_object(gj.at("target")), x);
  CHECK(j.at("terms") == multichain_to_json(a, y));
  // output terms are accepted as input again
  CHECK(multichain_from_json(a, j) == y);
  // (1)(1) = 2x
  CHECK(y == MultiChain{{{{1}, {}}, Rational(2)}});

  // a graph that is not a morphism between the given objects
  CHECK(run_cli("act --source 0/1 --target 0/1 " + data("product_graph.json") + " " + data("dual_numbers.json") +
                " " + data("product_inputs.json"))
            .code == 1);
}

TEST_CASE("cli enumerate output re-parses") {
  Run r = run_cli("enumerate --category SD --source 1/1 --target 1/0 --genus 0");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("format_version") == kFormatVersion);
  int graphs = 0;
  for (auto& [deg, list] : j.at("basis").items())
    for (const Json& g : list) {
      CHECK(graph_to_json(graph_from_json(g)).dump() == g.dump());
      ++graphs;
    }
  CHECK(graphs > 0);
}

TEST_CASE("cli check-bv") {
  Run r = run_cli("check-bv --max-length 4 " + data("sphere2.json"));
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("format_version") == kFormatVersion);
  CHECK(j.at("ok") == true);
}
