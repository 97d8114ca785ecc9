#include <benchmark/benchmark.h>

#include "escrate/experiments.hpp"

using namespace escrate;

namespace {

WordCollection table3_row6(int q) {
  return WordCollection::parse("abbbb,bbbba,bbabb", q, ParseMode::Abstract);
}

void BM_CorrelationMatrix(benchmark::State& state) {
  WordCollection g = table3_row6(3);
  for (auto _ : state) {
    RFunction r = r_function(g);
    benchmark::DoNotOptimize(r.reduced.num.degree());
  }
}
BENCHMARK(BM_CorrelationMatrix);

void BM_PerronPolynomial(benchmark::State& state) {
  WordCollection g = table3_row6(3);
  for (auto _ : state) {
    PerronResult r = perron_root_poly(g, 3);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PerronPolynomial);

void BM_PerronMatrix(benchmark::State& state) {
  WordCollection g = WordCollection::parse("02,10,11,21,22", 3, ParseMode::Digit);
  TransferMatrix t = transfer_matrix(build_avoidance_automaton(g, 3));
  for (auto _ : state) {
    PerronResult r = spectral_radius(t);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PerronMatrix);

void BM_SeriesCoefficients(benchmark::State& state) {
  WordCollection g = table3_row6(3);
  RFunction r = r_function(g);
  IntPolynomial num = IntPolynomial::variable() * r.reduced.den;
  IntPolynomial den = survivor_char_poly(g, 3);
  for (auto _ : state) {
    auto f = series_coefficients(num, den, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(f.back());
  }
}
BENCHMARK(BM_SeriesCoefficients)->Arg(16)->Arg(128);

void BM_CountWords(benchmark::State& state) {
  AvoidanceAutomaton a = build_avoidance_automaton(table3_row6(3), 3);
  for (auto _ : state) {
    BigInt f = count_words(a, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(f.get_mpz_t());
  }
}
BENCHMARK(BM_CountWords)->Arg(16)->Arg(128);

void BM_CompareEscape(benchmark::State& state) {
  HoleSpec h1(5, WordCollection::parse("aaa,bbb", 5, ParseMode::Abstract));
  HoleSpec h2(5, WordCollection::parse("aba,bcb", 5, ParseMode::Abstract));
  for (auto _ : state) {
    ComparisonResult r = compare_escape(h1, h2);
    benchmark::DoNotOptimize(r.ordering);
  }
}
BENCHMARK(BM_CompareEscape);

void BM_ReproduceTable1(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = reproduce_table(1);
    benchmark::DoNotOptimize(rows.size());
  }
}
BENCHMARK(BM_ReproduceTable1);

}  // namespace

BENCHMARK_MAIN();
