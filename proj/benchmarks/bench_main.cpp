// Microbenchmarks for the hot paths: identity checking, window
// materialization, template expansion/solving and tuple normalization.

#include <benchmark/benchmark.h>

#include <leibniz/algebra.hpp>
#include <leibniz/fock.hpp>
#include <leibniz/heisenberg.hpp>
#include <leibniz/minimal_rep.hpp>
#include <leibniz/rng.hpp>
#include <leibniz/template_solver.hpp>

using namespace leibniz;

namespace {

void bm_leibniz_check_h9(benchmark::State& state) {
  const Algebra A = make_heisenberg(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leibniz_check(A).ok);
  }
}
BENCHMARK(bm_leibniz_check_h9);

void bm_materialize_hfl3(benchmark::State& state) {
  const GradedAlgebra G = build_hfl(3, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(materialize(G, 6).algebra.dim());
  }
}
BENCHMARK(bm_materialize_hfl3);

void bm_windowed_check_hfl3(benchmark::State& state) {
  const Materialized M = materialize(build_hfl(3, 6), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leibniz_check(M).checked);
  }
}
BENCHMARK(bm_windowed_check_hfl3);

void bm_expand_m1_template(benchmark::State& state) {
  const TemplateAlgebra T = make_minrep_m1_template();
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_constraints(T).triples_expanded);
  }
}
BENCHMARK(bm_expand_m1_template);

void bm_solve_m1_template(benchmark::State& state) {
  const TemplateAlgebra T = make_minrep_m1_template();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_template(T).rank);
  }
}
BENCHMARK(bm_solve_m1_template);

void bm_solve_hfl_template(benchmark::State& state) {
  const TemplateAlgebra T = make_hfl_template(1, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_template(T).rank);
  }
}
BENCHMARK(bm_solve_hfl_template);

void bm_normalize_m1(benchmark::State& state) {
  Rng rng(7);
  std::vector<ParamFamilyM1> tuples;
  for (int i = 0; i < 64; ++i) {
    ParamFamilyM1 p;
    p.alpha1 = rng.rational(-5, 5);
    p.alpha2 = rng.rational(-5, 5);
    p.alpha3 = rng.rational(-5, 5);
    p.beta1 = rng.rational(-5, 5);
    p.beta2 = rng.rational(-5, 5);
    p.delta1 = rng.rational(-5, 5);
    p.delta2 = rng.rational(-5, 5);
    p.eta1 = rng.rational(-5, 5);
    p.theta1 = rng.rational(-5, 5);
    tuples.push_back(p);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_m1(tuples[i++ % tuples.size()]).entry_index);
  }
}
BENCHMARK(bm_normalize_m1);

void bm_bracket_hfl3(benchmark::State& state) {
  const Materialized M = materialize(build_hfl(3, 6), 6);
  const Algebra& A = M.algebra;
  Vec a, b;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (i % 2 == 0) a[i] = Rational(static_cast<long>(i) + 1, 3);
    if (i % 3 == 0) b[i] = Rational(2, static_cast<long>(i) + 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(A.bracket(a, b).size());
  }
}
BENCHMARK(bm_bracket_hfl3);

}  // namespace

BENCHMARK_MAIN();
