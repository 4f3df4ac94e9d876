#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "singlen/dmodlen.hpp"
#include "singlen/errors.hpp"
#include "test_util.hpp"

using namespace singlen;
using singlen::test::P;
using singlen::test::random_poly;

TEST_CASE("germ reduction") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  auto s = reduced_germ(prof.f * P("x"), 2, prof);
  CHECK(s.pole == 1);
  CHECK(s.numerator == P("x"));
  CHECK(s.was_auto_reduced);

  auto t = reduced_germ(P("x*y*z"), 2, prof);
  CHECK(t.pole == 2);
  CHECK(!t.was_auto_reduced);

  auto u = reduced_germ(prof.f * prof.f, 2, prof);
  CHECK(u.pole == 0);
  CHECK(u.numerator == P("1"));
}

TEST_CASE("germ derivative") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  MeromorphicGerm s(P("1"), 1);
  auto ds = germ_derivative(s, 0, prof);
  CHECK(ds.pole == 2);
  CHECK(ds.numerator == P("x^2") * Rational(-3));

  MeromorphicGerm c(P("x"), 0);
  auto dc = germ_derivative(c, 0, prof);
  CHECK(dc.pole == 0);
  CHECK(dc.numerator == P("1"));
}

TEST_CASE("quotient lengths and reduced genus") {
  auto cubic = build_profile(P("x^3 + y^3 + z^3"));
  CHECK(length_power_quotient(cubic, 0) == 1);
  CHECK(length_power_quotient(cubic, 1) == 2);
  CHECK(length_hodge_quotient(cubic, 0) == 1);
  CHECK(reduced_genus(cubic) == 1);

  CHECK(reduced_genus(build_profile(P("x^5 + y^5 + z^5"))) == 6);
  CHECK(reduced_genus(build_profile(P("x^2 + y^3 + z^5"))) == 0);
}

TEST_CASE("length report") {
  auto r = meromorphic_length_report(build_profile(P("x^3 + y^3 + z^3")), 1);
  CHECK(r.hprime_dim == 2);
  CHECK(r.reduced_genus == 1);
  CHECK(r.quotient_lengths == std::vector<unsigned>{1, 2});
  CHECK(r.total_length_including_O == 4);
  CHECK(r.length_quotient_by_O == 3);

  auto r8 = meromorphic_length_report(build_profile(P("x^2 + y^3 + z^5")), 1);
  CHECK(r8.total_length_including_O == 2);
  CHECK(r8.length_quotient_by_O == 1);

  auto ra2 = meromorphic_length_report(build_profile(P("x^2 + y^2 + z^3")), 1);
  CHECK(ra2.total_length_including_O == 2);
}

TEST_CASE("vilonen membership examples") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  CHECK(vilonen_membership(MeromorphicGerm(P("1"), 0), prof));
  CHECK(!vilonen_membership(MeromorphicGerm(P("1"), 1), prof));
  CHECK(vilonen_membership(MeromorphicGerm(P("x^2"), 1), prof));
  CHECK(!vilonen_membership(MeromorphicGerm(P("x*y*z"), 2), prof));
}

TEST_CASE("power membership examples") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  MeromorphicGerm s(P("x*y*z"), 2);
  CHECK(!power_membership(s, 0, prof));
  CHECK(power_membership(s, 1, prof));
}

TEST_CASE("minimal power index") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  CHECK(min_power_index(MeromorphicGerm(P("1"), 1), prof) == 0);
  CHECK(min_power_index(MeromorphicGerm(P("x*y*z"), 2), prof) == 1);
  CHECK(!min_power_index(MeromorphicGerm(P("x^2"), 1), prof).has_value());
}

TEST_CASE("submodule lengths") {
  auto prof = build_profile(P("x^3 + y^3 + z^3"));
  CHECK(submodule_length({MeromorphicGerm(P("1"), 1)}, prof) == 1);
  CHECK(submodule_length({MeromorphicGerm(P("1"), 2)}, prof) == 2);
  CHECK(submodule_length({MeromorphicGerm(P("x^2"), 1)}, prof) == 0);
  CHECK_THROWS_AS(submodule_length({MeromorphicGerm(P("1"), 0)}, prof),
                  GenericAgreementViolated);
}

TEST_CASE("submodule length matches the power quotient") {
  for (const auto& ftext : {"x^3 + y^3 + z^3", "x^5 + y^5 + z^5", "x^2*y + y^3 + z^3"}) {
    auto prof = build_profile(P(ftext));
    for (int l = 0; l <= static_cast<int>(prof.n) - 2; ++l) {
      std::vector<MeromorphicGerm> gens{MeromorphicGerm(P("1"), static_cast<unsigned>(l + 1))};
      CHECK(submodule_length(gens, prof) == length_power_quotient(prof, l));
    }
  }
}

TEST_CASE("algebraic report reproduces the local one") {
  Polynomial f = P("x^3 + y^3 + z^3");
  auto global = algebraic_report(f, 1);
  auto local = meromorphic_length_report(build_profile(f), 1);
  CHECK(global.hprime_dim == local.hprime_dim);
  CHECK(global.quotient_lengths == local.quotient_lengths);
  CHECK(global.total_length_including_O == local.total_length_including_O);

  CHECK_THROWS_AS(algebraic_report(P("x^2*y^2"), 1), MultipleOrNonIsolatedSingularities);
}

TEST_CASE("membership is monotone in the power") {
  auto prof = build_profile(P("x^5 + y^5 + z^5"));
  std::mt19937 rng(271);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<unsigned> kd(0, 3);
    auto s = reduced_germ(random_poly(rng, 3, 5, 5), kd(rng), prof);
    bool prev = false;
    for (int l = 0; l <= static_cast<int>(prof.n) - 2; ++l) {
      bool now = power_membership(s, l, prof);
      if (prev) CHECK(now);
      prev = now;
      auto idx = min_power_index(s, prof);
      CHECK(now == (idx.has_value() ? *idx <= l : true));
    }
    auto idx = min_power_index(s, prof);
    if (idx) CHECK(*idx <= static_cast<int>(prof.n) - 2);
    // Generic agreement: 1/f^{l+1} itself never lies in a smaller power.
  }
}

TEST_CASE("the trivial submodule is closed under derivatives") {
  for (const auto& ftext : {"x^3 + y^3 + z^3", "x^2 + y^3 + z^5"}) {
    auto prof = build_profile(P(ftext));
    std::mt19937 rng(39);
    int found = 0;
    for (int iter = 0; iter < 60 && found < 12; ++iter) {
      std::uniform_int_distribution<unsigned> kd(0, 2);
      auto s = reduced_germ(random_poly(rng, 3, 4, 4), kd(rng), prof);
      if (!vilonen_membership(s, prof)) continue;
      ++found;
      for (std::size_t i = 0; i < prof.n; ++i)
        CHECK(vilonen_membership(germ_derivative(s, i, prof), prof));
    }
    CHECK(found > 0);
  }
}

TEST_CASE("generator powers realize every quotient length") {
  auto prof = build_profile(P("x^4 + y^4 + z^4"));
  auto table = pole_filtration_dims(prof, static_cast<int>(prof.n) - 2);
  for (int l = 0; l <= static_cast<int>(prof.n) - 2; ++l)
    CHECK(length_power_quotient(prof, l) == table.dims[static_cast<std::size_t>(l)]);
  auto r = meromorphic_length_report(prof, static_cast<int>(prof.n) - 2);
  CHECK(r.total_length_including_O == 2 + r.hprime_dim);
  CHECK(r.length_quotient_by_O == 1 + r.hprime_dim);
  CHECK(r.quotient_lengths.back() == r.hprime_dim);
}
