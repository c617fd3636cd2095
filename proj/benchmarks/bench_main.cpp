#include <benchmark/benchmark.h>

#include "cmpl/criterion.hpp"
#include "cmpl/parse.hpp"

using namespace cmpl;

namespace {

FieldPtr F3() { return FqField::of_order(3); }

PrecisionBudget digits(long A) {
  PrecisionBudget b;
  b.target = A;
  return b;
}

// fresh module per iteration so the coefficient cache does not hide the work
void BM_LogCoeffs(benchmark::State& st) {
  auto K = ExtField::trivial(F3());
  const Composition s({2, 2, 2});
  const auto u = parse_tuple(K, "theta;theta+1;theta");
  for (auto _ : st) {
    const TModule G(s, u);
    benchmark::DoNotOptimize(G.log_coeffs(static_cast<std::size_t>(st.range(0))));
  }
}
BENCHMARK(BM_LogCoeffs)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ExpCoeffs(benchmark::State& st) {
  auto K = ExtField::trivial(F3());
  const Composition s({1, 2});
  const auto u = parse_tuple(K, "theta;theta+1");
  for (auto _ : st) {
    const TModule G(s, u);
    benchmark::DoNotOptimize(G.exp_coeffs(static_cast<std::size_t>(st.range(0))));
  }
}
BENCHMARK(BM_ExpCoeffs)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CmplEvalV(benchmark::State& st) {
  auto F = F3();
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly::theta(F)));
  const auto u = parse_tuple(K, "theta;theta+1;theta^2+2");
  for (auto _ : st) benchmark::DoNotOptimize(cmpl_eval_v(Composition({1, 2, 1}), u, emb, digits(st.range(0))));
}
BENCHMARK(BM_CmplEvalV)->RangeMultiplier(2)->Range(20, 160)->Unit(benchmark::kMillisecond);

void BM_CmplEvalInf(benchmark::State& st) {
  auto F = F3();
  const std::vector<RatFunc> u{RatFunc(Poly::theta(F)), RatFunc(Poly(F, {1, 1}))};
  PrecisionBudget b;
  b.target = -st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(cmpl_eval_inf(Composition({1, 2}), u, b));
}
BENCHMARK(BM_CmplEvalInf)->RangeMultiplier(2)->Range(20, 160)->Unit(benchmark::kMillisecond);

void BM_LogEvalV(benchmark::State& st) {
  auto F = F3();
  auto K = ExtField::trivial(F);
  auto emb = VAdicEmbedding::make(K, VPlace::make(Poly::theta(F)));
  const TModule G(Composition({1, 2}), parse_tuple(K, "theta+1;theta"));
  const auto x = G.special_point();
  for (auto _ : st) benchmark::DoNotOptimize(log_eval_v(G, x, emb, digits(st.range(0))));
}
BENCHMARK(BM_LogEvalV)->RangeMultiplier(2)->Range(20, 80)->Unit(benchmark::kMillisecond);

void BM_TorsionSearch(benchmark::State& st) {
  auto F = F3();
  auto K = ExtField::make(F, parse_minpoly(F, "x^2-2*theta"));
  const TModule C(Composition({1}), {ExtElem::generator(K)});
  for (auto _ : st) benchmark::DoNotOptimize(torsion_search(C, C.special_point(), st.range(0)));
}
BENCHMARK(BM_TorsionSearch)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_ZetaEulerian(benchmark::State& st) {
  auto F = F3();
  for (auto _ : st) benchmark::DoNotOptimize(zeta_eulerian_check(F, 2, 4, st.range(0)));
}
BENCHMARK(BM_ZetaEulerian)->RangeMultiplier(2)->Range(40, 160)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
