#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "metice/cli.hpp"
#include "metice/serialize.hpp"

using namespace metice;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("enumerate counts states") {
  json j = run_json({"enumerate", "--rank", "2", "--lambda", "3,2,0"});
  CHECK(j["count"] == 41);
  CHECK(j["states"].size() == 41);
  CHECK(j["boundary"]["columns"] == 6);
  IceState s = state_from_json(j["states"][0]);
  CHECK(s.columns() == 6);
  CHECK(state_to_json(s, Family::gamma) == j["states"][0]);
}

TEST_CASE("partition text") {
  Run r = run({"partition", "--rank", "1", "--lambda", "0,0", "--ice", "gamma", "--n", "1", "--coeff", "symbolic", "--text"});
  CHECK(r.code == 0);
  CHECK(r.out == "−u·z₁ + z₂\n");
  Run r2 = run({"partition", "--rank", "1", "--lambda", "1,0", "--n", "2", "--text"});
  CHECK(r2.out == "−u·z₁² + h(1)·z₁·z₂ + z₂²\n");
}

TEST_CASE("partition JSON round-trips") {
  json j = run_json({"partition", "--rank", "2", "--lambda", "3,1,0", "--n", "3"});
  LaurentPoly p = poly_from_json(j["poly"]);
  CHECK(poly_to_json(p) == j["poly"]);
  CHECK(to_string(p) == j["text"].get<std::string>());
  json num = run_json({"partition", "--rank", "2", "--lambda", "3,1,0", "--n", "3", "--q", "7"});
  LaurentPoly pn = poly_from_json(num["poly"]);
  CHECK(pn.terms().begin()->second.mode() == CoeffMode::numeric);
  CHECK(poly_equal(pn, poly_from_json(poly_to_json(pn)), 0.0));
}

TEST_CASE("whittaker output") {
  json j = run_json({"whittaker", "--rank", "1", "--lambda", "0,0", "--n", "2"});
  CHECK(j["series"] == "1 + g(1)·q^{1−2s₁}");
  WhittakerTable t = whittaker_from_json(j);
  CHECK(whittaker_to_json(t)["entries"] == j["entries"]);
}

TEST_CASE("symbolic output is reproducible") {
  std::vector<std::string> args{"whittaker", "--rank", "2", "--lambda", "2,1,0", "--n", "3"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> suite{"verify", "two-row", "--n", "1", "--count", "5", "--seed", "9"};
  CHECK(run(suite).out == run(suite).out);
}

TEST_CASE("verify subcommands pass") {
  const std::vector<std::vector<std::string>> cases{
      {"verify", "statement-a", "--rank", "2", "--lambda", "3,2,0", "--n", "2", "--q", "5"},
      {"verify", "statement-a", "--rank", "2", "--lambda", "2,1,0", "--n", "1"},
      {"verify", "prop-matching", "--rank", "2", "--lambda", "3,2,0", "--n", "3"},
      {"verify", "ybe-n1"},
      {"verify", "commute-rows", "--rank", "2", "--lambda", "3,2,0"},
      {"verify", "two-row", "--n", "2", "--q", "5", "--count", "10"},
      {"verify", "statement-b", "--n", "3", "--q", "7"},
      {"verify", "functional-eq", "--rank", "2", "--lambda", "2,1,0", "--n", "3", "--q", "7"},
      {"verify", "charges", "--rank", "2", "--lambda", "3,2,0", "--n", "3"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[1]);
    json j = run_json(args);
    CHECK(j["pass"] == true);
    CHECK(j["check"] == args[1]);
    CHECK(j.contains("params"));
    CHECK_FALSE(j.contains("counterexample"));
  }
}

TEST_CASE("verification failures carry a counterexample") {
  json j = run_json({"verify", "statement-b", "--n", "1", "--qr", "printed"}, 1);
  CHECK(j["pass"] == false);
  CHECK(j.contains("counterexample"));
  json a = run_json({"verify", "statement-a", "--rank", "2", "--lambda", "2,1,0", "--n", "2", "--level", "none"}, 1);
  CHECK(a["counterexample"].contains("k"));
}

TEST_CASE("single functional equation shows both sides") {
  json j = run_json({"verify", "functional-eq", "--rank", "1", "--lambda", "0,0", "--n", "2", "--q", "5", "--i", "1", "--j", "1"});
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0].contains("lhs"));
  CHECK(j["results"][0].contains("rhs"));
}

TEST_CASE("configuration errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"partition", "--rank", "1", "--lambda", "0,0", "--coeff", "symbolic", "--q", "5"},
           {"partition", "--rank", "1", "--lambda", "0,0", "--coeff", "numeric"},
           {"partition", "--rank", "1", "--lambda", "0,0", "--n", "2", "--q", "7"},
           {"partition", "--rank", "1", "--lambda", "0,1"},
           {"partition", "--lambda", "0,0"},
           {"gauss", "--n", "2"},
           {"partition", "--rank", "1", "--lambda", "x,0"},
       }) {
    Run r = run(args);
    CHECK(r.code == 2);
    json e = json::parse(r.err);
    CHECK(e.contains("error"));
    CHECK(e.contains("detail"));
  }
  Run usage = run({"frobnicate"});
  CHECK(usage.code == 2);
  CHECK(json::parse(usage.err)["error"] == "usage");
}

TEST_CASE("gauss table output") {
  json j = run_json({"gauss", "--n", "2", "--q", "5"});
  CHECK(j["root"] == 2);
  CHECK(j["g"][0][0].get<double>() == doctest::Approx(-0.2));
  CHECK(j["h"][0][0].get<double>() == doctest::Approx(0.8));
}

TEST_CASE("bench output") {
  json j = run_json({"bench", "--rank", "2", "--lambda", "3,2,0", "--n", "2", "--q", "5", "--with-enumeration"});
  CHECK(j["states"] == 41);
  CHECK(j["agree"] == true);
}

TEST_CASE("output file") {
  const std::string path = "metice_cli_test_output.json";
  Run r = run({"gauss", "--n", "1", "--q", "5", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  json j = json::parse(f);
  CHECK(j["q"] == 5);
  std::remove(path.c_str());
}

TEST_CASE("coefficient JSON round-trips") {
  Coefficient big = Coefficient::symbolic(QPoly::monomial(3, Rational("123456789012345678901234567890/7")),
                                          GaussMonomial::g_symbol(2, 2));
  CHECK(coeff_from_json(coeff_to_json(big)) == big);
  Coefficient num = Coefficient::numeric({0.5, -2.0});
  CHECK(coeff_from_json(coeff_to_json(num)) == num);
  ShortPattern t{{6, 4, 1, 0}, {5, 3, 1}, {4, 3}};
  CHECK(short_pattern_from_json(short_pattern_to_json(t)) == t);
  GTPattern T{{{5, 3, 0}, {3, 1}, {3}}};
  CHECK(pattern_from_json(pattern_to_json(T)) == T);
}
