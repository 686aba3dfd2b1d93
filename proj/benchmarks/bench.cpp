#include <benchmark/benchmark.h>

#include <random>

#include "yangrep/analysis.hpp"
#include "yangrep/classify.hpp"

using namespace yangrep;

namespace {

SparseMat random_sparse(int n, int seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4), fill(0, 3);
  SparseMat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (fill(rng) == 0) m.set(r, c, Rat(entry(rng)) / Rat(1 + (r % 3)));
  return m;
}

Action tensor_pair(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2, bool sym) {
  auto scheme = sym ? symmetric_scheme(2) : standard_scheme(2);
  return tensor_action(
      {eval_module(build_gl2(a1, b1), scheme), eval_module(build_gl2(a2, b2), scheme)});
}

void BM_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SparseMat m = random_sparse(n, 42) * random_sparse(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_kernel)->Arg(16)->Arg(32)->Arg(64);

void BM_restrict(benchmark::State& state) {
  Action t = tensor_pair(Rat(2), Rat(0), Rat(1), Rat(-1), true);
  for (auto _ : state) benchmark::DoNotOptimize(restrict_S(t, Family::YMinus));
}
BENCHMARK(BM_restrict);

void BM_irreducibility_oracle(benchmark::State& state) {
  Action x = restrict_S(tensor_pair(Rat(2), Rat(0), Rat(1), Rat(-1), true), Family::YMinus);
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(x));
}
BENCHMARK(BM_irreducibility_oracle);

void BM_irreducible_quotient(benchmark::State& state) {
  Action x = tensor_pair(Rat(2), Rat(0), Rat(1), Rat(-1), false);
  DenseVec hw(x.dim, Rat(0));
  hw[0] = Rat(1);
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_quotient(x, hw));
}
BENCHMARK(BM_irreducible_quotient);

void BM_arrow_solver(benchmark::State& state) {
  FactoredSeries l1, l2;
  for (int i = 0; i < 6; ++i) {
    l1.mul_factor(Rat(i + 1), 1);
    l2.mul_factor(Rat(i - 1), 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(arrow(l1, l2));
}
BENCHMARK(BM_arrow_solver);

void BM_gamma_solver(benchmark::State& state) {
  FactoredSeries mu;
  for (const Rat& d : {Rat(1), Rat(-2), parse_rat_or_throw("1/2")}) {
    mu.mul_factor(-(d + 1), 1);
    mu.mul_factor(d, 1);
  }
  mu.mul_factor(Rat(2), 1);
  mu.mul_factor(parse_rat_or_throw("1/2"), -1);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_solver(mu));
}
BENCHMARK(BM_gamma_solver);

}  // namespace

BENCHMARK_MAIN();
