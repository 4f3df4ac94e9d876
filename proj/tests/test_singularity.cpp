#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "singlen/errors.hpp"
#include "singlen/singularity.hpp"
#include "test_util.hpp"

using namespace singlen;
using singlen::test::brieskorn_pham;
using singlen::test::P;

TEST_CASE("jacobian generators") {
  auto j1 = jacobian_generators(P("x^3 + y^3 + z^3"));
  CHECK(j1[0] == P("3*x^2"));
  CHECK(j1[1] == P("3*y^2"));
  CHECK(j1[2] == P("3*z^2"));

  auto j2 = jacobian_generators(P("x^2 + y^3 + z^5"));
  CHECK(j2[0] == P("2*x"));
  CHECK(j2[1] == P("3*y^2"));
  CHECK(j2[2] == P("5*z^4"));

  auto j3 = jacobian_generators(P("x*y*z"));
  CHECK(j3[0] == P("y*z"));
  CHECK(j3[1] == P("x*z"));
  CHECK(j3[2] == P("x*y"));
}

TEST_CASE("milnor numbers") {
  CHECK(milnor_number(P("x^3 + y^3 + z^3")) == 8);
  CHECK(milnor_number(P("x^2 + y^3 + z^5")) == 8);
  CHECK_THROWS_AS(milnor_number(P("x^2*y")), NonIsolatedError);
  CHECK_THROWS_AS(milnor_number(P("x^2 + 1")), DomainError);
  CHECK_THROWS_AS(milnor_number(parse_polynomial("x^2 + y^2", {"x", "y"})), DomainError);
}

TEST_CASE("detect_weights") {
  auto w1 = detect_weights(P("x^3 + y^3 + z^3"));
  REQUIRE(w1.has_value());
  CHECK(w1->w == std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

  auto w2 = detect_weights(P("x^2 + y^3 + z^5"));
  REQUIRE(w2.has_value());
  CHECK(w2->w == std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 5)});

  // Inconsistent: the pure powers force (1/4,1/4,1/4) but then xyz has
  // degree 3/4.
  CHECK(!detect_weights(P("x^4 + y^4 + z^4 + x*y*z")).has_value());

  // Underdetermined systems are rejected.
  CHECK(!detect_weights(P("x^2*y")).has_value());
}

TEST_CASE("build_profile on the cusp family") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  CHECK(prof.mu == 8);
  CHECK(prof.basis.size() == 8);
  for (const auto& beta : prof.basis) {
    Rational expected = singlen::test::rat(beta.total_degree() + 3, 3);
    CHECK(prof.spectral.at(beta) == expected);
  }
}

TEST_CASE("build_profile quadric in four variables") {
  auto prof = build_profile(parse_polynomial("x^2 + y^2 + z^2 + w^2", singlen::test::xyzw()));
  CHECK(prof.mu == 1);
  REQUIRE(prof.basis.size() == 1);
  CHECK(prof.basis.front().is_one());
  CHECK(prof.spectral.at(prof.basis.front()) == Rational(2));
}

TEST_CASE("build_profile rejections") {
  CHECK_THROWS_AS(build_profile(P("x^4 + y^4 + z^4 + x*y*z")), NotQuasiHomogeneousError);
  CHECK_THROWS_AS(build_profile(P("x^2*y")), NonIsolatedError);
  CHECK_THROWS_AS(build_profile(P("x^2 + y^2 + z^2 + 1")), DomainError);
}

TEST_CASE("Brieskorn-Pham law for mu and the spectrum") {
  for (unsigned a = 2; a <= 6; ++a)
    for (unsigned b = a; b <= 6; ++b)
      for (unsigned c = b; c <= 6; ++c) {
        if ((a - 1) * (b - 1) * (c - 1) > 200) continue;
        auto prof = build_profile(brieskorn_pham(a, b, c));
        CHECK(prof.mu == (a - 1) * (b - 1) * (c - 1));
        std::vector<Rational> expected;
        for (unsigned i = 1; i < a; ++i)
          for (unsigned j = 1; j < b; ++j)
            for (unsigned k = 1; k < c; ++k)
              expected.push_back(singlen::test::rat(i, a) + singlen::test::rat(j, b) + singlen::test::rat(k, c));
        std::vector<Rational> got;
        for (const auto& [beta, l] : prof.spectral) got.push_back(l);
        auto less = [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; };
        std::sort(expected.begin(), expected.end(), less);
        std::sort(got.begin(), got.end(), less);
        CHECK(got == expected);
      }
}

TEST_CASE("spectral symmetry and bounds") {
  for (const auto& f : {P("x^3 + y^3 + z^3"), P("x^2 + y^3 + z^5"), P("x^2*y + y^3 + z^3"),
                        P("x^4 + y^4 + z^4")}) {
    auto prof = build_profile(f);
    std::vector<Rational> values, reflected;
    for (const auto& [beta, l] : prof.spectral) {
      values.push_back(l);
      reflected.push_back(Rational(static_cast<long>(prof.n)) - l);
      CHECK(cmp(l, prof.weight_sum) >= 0);
      CHECK(cmp(l, Rational(static_cast<long>(prof.n)) - prof.weight_sum) <= 0);
    }
    auto less = [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; };
    std::sort(values.begin(), values.end(), less);
    std::sort(reflected.begin(), reflected.end(), less);
    CHECK(values == reflected);
    // min attained at beta = 0, max at the socle
    CHECK(values.front() == prof.weight_sum);
    CHECK(values.back() == Rational(static_cast<long>(prof.n)) - prof.weight_sum);
  }
}

TEST_CASE("scaling invariance") {
  for (const auto& f : {P("x^3 + y^3 + z^3"), P("x^2 + y^3 + z^5")}) {
    Polynomial scaled = f * Rational(7, 3);
    CHECK(milnor_number(scaled) == milnor_number(f));
    CHECK(detect_weights(scaled) == detect_weights(f));
  }
}
