// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "ulrich/appendix.hpp"
#include "ulrich/binomial.hpp"
#include "ulrich/certifier.hpp"
#include "ulrich/euler.hpp"
#include "ulrich/symmetric.hpp"

namespace {

using namespace ulrich;

void BM_BuildF(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_f(3, 4, s, 3, 1));
}
BENCHMARK(BM_BuildF)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_BinomLinear(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const SparsePoly u = u_poly(3, 4, s, 3) - Rational(2);
  for (auto _ : state) benchmark::DoNotOptimize(binom_poly(u, static_cast<long>(s) + 4));
}
BENCHMARK(BM_BinomLinear)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_ToBasis(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const SparsePoly f = divide_all_vars(build_f(2, 4, s, 2, 0));
  for (auto _ : state) benchmark::DoNotOptimize(to_basis(f));
}
BENCHMARK(BM_ToBasis)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DifferenceIdentities(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_difference_identities(4, s));
}
BENCHMARK(BM_DifferenceIdentities)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_CertifyVeronese(benchmark::State& state) {
  for (auto _ : state)
    for (long n = 4; n <= 8; ++n)
      for (long a = 2; a <= 5; ++a)
        for (long r = 1; r <= 3; ++r) benchmark::DoNotOptimize(certify_veronese(n, a, r));
}
BENCHMARK(BM_CertifyVeronese)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
