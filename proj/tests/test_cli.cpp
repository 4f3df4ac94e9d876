#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "singlen/errors.hpp"
#include "singlen/parse.hpp"
#include "singlen/report.hpp"
#include "test_util.hpp"

using namespace singlen;
using singlen::test::P;
using singlen::test::random_poly;

TEST_CASE("parser examples") {
  CHECK(P("x + y") == P("y + x"));
  CHECK(P("2*x^2") == P("x^2") * Rational(2));
  CHECK(P("x^2 - x^2").is_zero());
  CHECK(P("1/2*x") == P("x") * Rational(1, 2));
  CHECK(P("(x + y)*(x - y)") == P("x^2 - y^2"));
  CHECK(P("-x") == P("x") * Rational(-1));
  CHECK_THROWS_AS(P("x^(-1)"), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("q"), ParseError);
  CHECK_THROWS_AS(P("x y"), ParseError);
  CHECK_THROWS_AS(P("x^0.5"), ParseError);
  try {
    P("x + @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("render round trip") {
  auto vars = singlen::test::xyz();
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 60; ++iter) {
    Polynomial p = random_poly(rng, 3, 5, 6);
    CHECK(parse_polynomial(render_polynomial(p, vars), vars) == p);
  }
  CHECK(render_polynomial(Polynomial(3), vars) == "0");
}

TEST_CASE("element splitting") {
  auto e1 = split_element("1/f");
  CHECK(e1.numerator_text == "1");
  CHECK(e1.pole == 1);

  auto e2 = split_element("x*y*z/f^2");
  CHECK(e2.numerator_text == "x*y*z");
  CHECK(e2.pole == 2);

  auto e3 = split_element("x^2");
  CHECK(e3.numerator_text == "x^2");
  CHECK(e3.pole == 0);

  auto e4 = split_element("1/2");
  CHECK(e4.numerator_text == "1/2");
  CHECK(e4.pole == 0);
}

TEST_CASE("analysis report values") {
  AnalysisRequest req;
  req.poly_text = "x^3 + y^3 + z^3";
  req.variables = {"x", "y", "z"};
  auto r = run_analyze(req);
  CHECK(r.mu == 8);
  CHECK(r.hprime_dim == 2);
  CHECK(r.reduced_genus == 1);
  CHECK(r.pole_dims == std::vector<unsigned>{1, 2});
  CHECK(r.total_length_including_O == 4);
  CHECK(r.weights == std::vector<Rational>(3, Rational(1, 3)));
  CHECK(!r.oracle.has_value());

  req.run_oracle = true;
  auto ro = run_analyze(req);
  REQUIRE(ro.oracle.has_value());
  CHECK(ro.oracle->agrees);
  CHECK(ro.oracle->hprime_dim == 2);
}

TEST_CASE("json output is deterministic") {
  AnalysisRequest req;
  req.poly_text = "x^2*y + y^3 + z^3";
  req.variables = {"x", "y", "z"};
  auto a = run_analyze(req).to_json();
  auto b = run_analyze(req).to_json();
  CHECK(a == b);
  CHECK(a.find("\"input\"") != std::string::npos);
  CHECK(a.find("\"mu\"") != std::string::npos);
  CHECK(a.find("\"1/3\"") != std::string::npos);
  // key order is fixed
  CHECK(a.find("\"input\"") < a.find("\"variables\""));
  CHECK(a.find("\"variables\"") < a.find("\"weights\""));
  CHECK(a.find("\"mu\"") < a.find("\"spectral\""));
  CHECK(a.find("\"version\"") < a.find("\"order\""));
}

TEST_CASE("membership verdicts through the request surface") {
  AnalysisRequest req;
  req.poly_text = "x^3 + y^3 + z^3";
  req.variables = {"x", "y", "z"};
  auto v1 = run_membership(req, "x^2/f");
  CHECK(v1.in_l);
  auto v2 = run_membership(req, "x*y*z/f^2");
  CHECK(!v2.in_l);
  CHECK(v2.min_power == 1);
  CHECK(!v2.witness.empty());
  auto v3 = run_membership(req, "(x^3 + y^3 + z^3)/f");
  CHECK(v3.was_auto_reduced);
  CHECK(v3.in_l);
}

#ifdef SINGLEN_CLI_PATH
namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(SINGLEN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("command line golden runs") {
  auto ok = run_cli("analyze --poly \"x^3 + y^3 + z^3\" --vars x,y,z");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"mu\": 8") != std::string::npos);

  auto again = run_cli("analyze --poly \"x^3 + y^3 + z^3\" --vars x,y,z");
  CHECK(again.out == ok.out); // byte-stable

  CHECK(run_cli("analyze --poly \"x^2*y\" --vars x,y,z").exit_code == 2);
  CHECK(run_cli("analyze --poly \"x^4 + y^4 + z^4 + x*y*z\" --vars x,y,z").exit_code == 3);
  CHECK(run_cli("analyze --poly \"x^(-1)\" --vars x,y,z").exit_code == 4);

  auto mem = run_cli("membership --poly \"x^3 + y^3 + z^3\" --vars x,y,z --element \"x*y*z/f^2\"");
  CHECK(mem.exit_code == 0);
  CHECK(mem.out.find("min_power_index 1") != std::string::npos);

  auto text = run_cli("analyze --poly \"x^3 + y^3 + z^3\" --vars x,y,z --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("mu") != std::string::npos);

  auto oracle = run_cli("analyze --poly \"x^2 + y^3 + z^5\" --vars x,y,z --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("\"agrees\": true") != std::string::npos);
}
#endif
