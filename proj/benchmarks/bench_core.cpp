// Copyright 2026 The qutrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qutrit/correlations.hpp"
#include "qutrit/generators.hpp"
#include "qutrit/sampler.hpp"

using namespace qutrit;

static void BM_exact_scalar_mul(benchmark::State &state) {
    ExactScalar a(Rational(3, 7), Rational(-2, 5), Rational(1, 3), Rational(5, 11));
    ExactScalar b(Rational(-1, 2), Rational(4, 9), Rational(7, 3), Rational(-6, 13));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_exact_scalar_mul);

static void BM_exact_scalar_sign(benchmark::State &state) {
    ExactScalar x = ExactScalar(5) - ExactScalar(2) * ExactScalar::sqrt6();
    for (auto _ : state) {
        benchmark::DoNotOptimize(x.sign());
    }
}
BENCHMARK(BM_exact_scalar_sign);

static void BM_hs_project_qutrit_operator(benchmark::State &state) {
    const ExactMatrix c = qutrit_operator().matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hs_project(c, Group::SU3));
    }
}
BENCHMARK(BM_hs_project_qutrit_operator)->Unit(benchmark::kMillisecond);

static void BM_eig_hermitian_9x9(benchmark::State &state) {
    FloatMatrix c = to_float(qutrit_operator().matrix());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(c));
    }
}
BENCHMARK(BM_eig_hermitian_9x9)->Unit(benchmark::kMicrosecond);

static void BM_sample_psi00(benchmark::State &state) {
    MeasurementPlan plan = plan_from_operator(qutrit_operator());
    const ExactVector &s = qutrit_state(StateLabel::Psi00).vector;
    const auto shots = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate(plan, s, shots, 42));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(shots * plan.terms.size()));
}
BENCHMARK(BM_sample_psi00)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
