#include <benchmark/benchmark.h>

#include <random>

#include "logres/p2solver.hpp"
#include "logres/poly_text.hpp"
#include "logres/resultant.hpp"

using namespace logres;

namespace {

poly::Polynomial random_form(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coef(-9, 9);
  poly::Polynomial p(3);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      p.add_term({static_cast<unsigned>(a), static_cast<unsigned>(b), static_cast<unsigned>(degree - a - b)},
                 coef(rng));
  return p;
}

foliation::HomogeneousVectorField random_field(int degree, unsigned seed) {
  std::mt19937 rng(seed);
  while (true) {
    try {
      return foliation::HomogeneousVectorField({random_form(rng, degree), random_form(rng, degree),
                                                random_form(rng, degree)});
    } catch (const foliation::InvalidFoliation&) {
    }
  }
}

}  // namespace

static void BM_WorkedExample(benchmark::State& state) {
  const auto vars = text::VariableNames::homogeneous(2);
  const foliation::HomogeneousVectorField v({text::parse_polynomial("0", vars),
                                             text::parse_polynomial("z1^2 - z0^2", vars),
                                             text::parse_polynomial("z2^2 - z0*z2", vars)});
  const std::vector<poly::Polynomial> divisor{text::parse_polynomial("z2", vars), text::parse_polynomial("z0", vars)};
  for (auto _ : state) benchmark::DoNotOptimize(p2::enumerate_singularities(v, divisor));
}
BENCHMARK(BM_WorkedExample)->Unit(benchmark::kMicrosecond);

static void BM_RandomField(benchmark::State& state) {
  const auto v = random_field(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(p2::enumerate_singularities(v, {}));
}
BENCHMARK(BM_RandomField)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_ChartResultant(benchmark::State& state) {
  const auto v = random_field(static_cast<int>(state.range(0)), 9);
  const auto chart = foliation::affine_chart(v, 0);
  for (auto _ : state) benchmark::DoNotOptimize(elim::sylvester_resultant(chart[0], chart[1], 0));
}
BENCHMARK(BM_ChartResultant)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_ChartResultantBareiss(benchmark::State& state) {
  const auto v = random_field(static_cast<int>(state.range(0)), 9);
  const auto chart = foliation::affine_chart(v, 0);
  const auto a = elim::to_bipoly(chart[0], 0);
  const auto b = elim::to_bipoly(chart[1], 0);
  for (auto _ : state) benchmark::DoNotOptimize(elim::resultant_bareiss(a, b));
}
BENCHMARK(BM_ChartResultantBareiss)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
