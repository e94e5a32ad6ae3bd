#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "quadmat/quadmat.hpp"

using namespace quadmat;

namespace {

std::vector<Mat2> random_matrices(std::size_t count, long magnitude,
                                  unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-magnitude, magnitude);
  std::vector<Mat2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Mat2{entry(rng), entry(rng), entry(rng), entry(rng)});
  return out;
}

void BM_mat_pow_closed(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  const std::vector<Mat2> mats = random_matrices(64, 1000, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_pow_closed(mats[i], n));
    i = (i + 1) % mats.size();
  }
}
BENCHMARK(BM_mat_pow_closed)->Arg(8)->Arg(64)->Arg(512);

void BM_mat_pow_naive(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  const std::vector<Mat2> mats = random_matrices(64, 1000, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_pow_naive(mats[i], n));
    i = (i + 1) % mats.size();
  }
}
BENCHMARK(BM_mat_pow_naive)->Arg(8)->Arg(64)->Arg(512);

void BM_quadint_mul(benchmark::State& state) {
  QuadInt x(11, 3, 5), acc = QuadInt::integer(1);
  int steps = 0;
  for (auto _ : state) {
    acc = acc * x;
    benchmark::DoNotOptimize(acc);
    if (++steps == 512) {  // keep operand size bounded
      acc = QuadInt::integer(1);
      steps = 0;
    }
  }
}
BENCHMARK(BM_quadint_mul);

void BM_exponent_classify(benchmark::State& state) {
  const std::vector<QuadInt> xs = {
      QuadInt(11, 3, 5),  QuadInt(0, 2, 2),  QuadInt(-1, 1, -3),
      QuadInt(2, 2, -1),  QuadInt(3, 1, -3), QuadInt(4, 0, 1),
      QuadInt(1, -1, -3), QuadInt(8, 6, 5),
  };
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponent(xs[i]));
    i = (i + 1) % xs.size();
  }
}
BENCHMARK(BM_exponent_classify);

void BM_member_search(benchmark::State& state) {
  const CommutantBasis basis = make_basis(1, 1, 1);
  const EquationSpec spec = EquationSpec::fermat(3);
  const long bound = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_members(basis, spec, bound));
}
BENCHMARK(BM_member_search)->Arg(4)->Arg(8);

void BM_catalan_scan(benchmark::State& state) {
  const long bound = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_search(bound, 6));
}
BENCHMARK(BM_catalan_scan)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
