#include <benchmark/benchmark.h>

#include "singlen/derham.hpp"
#include "singlen/groebner.hpp"
#include "singlen/oracle.hpp"
#include "singlen/parse.hpp"
#include "singlen/singularity.hpp"

using namespace singlen;

namespace {

Polynomial poly(const std::string& text) {
  return parse_polynomial(text, {"x", "y", "z"});
}

void BM_buchberger_jacobian(benchmark::State& state) {
  Polynomial f = poly("x^5 + y^5 + z^5 + x*y*z^3");
  auto gens = jacobian_generators(f);
  TermOrder order = TermOrder::grevlex(3);
  for (auto _ : state) {
    auto gb = buchberger(gens, order);
    benchmark::DoNotOptimize(gb.basis().size());
  }
}
BENCHMARK(BM_buchberger_jacobian);

void BM_build_profile(benchmark::State& state) {
  Polynomial f = poly("x^5 + y^5 + z^5");
  for (auto _ : state) {
    auto prof = build_profile(f);
    benchmark::DoNotOptimize(prof.mu);
  }
}
BENCHMARK(BM_build_profile);

void BM_reduce_class(benchmark::State& state) {
  auto prof = build_profile(poly("x^5 + y^5 + z^5"));
  Polynomial a = poly("x^4*y^4*z^4 + x^2*y^3*z^2 + x*y*z");
  for (auto _ : state) {
    auto c = reduce_class(graded_component(a, prof.w, Rational(3) - prof.weight_sum), 3, prof);
    benchmark::DoNotOptimize(c.coeffs.size());
  }
}
BENCHMARK(BM_reduce_class);

void BM_oracle_session(benchmark::State& state) {
  auto prof = build_profile(poly("x^4 + y^4 + z^4"));
  for (auto _ : state) {
    OracleSession session(prof, 4);
    benchmark::DoNotOptimize(session.hprime_dim());
  }
}
BENCHMARK(BM_oracle_session);

void BM_filtration_dims(benchmark::State& state) {
  auto prof = build_profile(poly("x^6 + y^6 + z^6"));
  for (auto _ : state) {
    auto t = pole_filtration_dims(prof, 2);
    benchmark::DoNotOptimize(t.hprime_dim);
  }
}
BENCHMARK(BM_filtration_dims);

} // namespace

BENCHMARK_MAIN();
