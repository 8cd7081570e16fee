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

#ifndef QUTRIT_SAMPLER_HPP
#define QUTRIT_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "qutrit/correlations.hpp"
#include "qutrit/exact.hpp"
#include "qutrit/linalg.hpp"

namespace qutrit {

/// One local-measurement term: coefficient * (obs_a (x) obs_b).
struct MeasurementTerm {
    ExactScalar coefficient;
    size_t index_a;
    size_t index_b;
    ExactMatrix obs_a;
    ExactMatrix obs_b;
};

struct MeasurementPlan {
    Group group;
    std::vector<MeasurementTerm> terms;

    /// sum coefficient * obs_a (x) obs_b.
    ExactMatrix reconstruct() const;
};

/// One term per nonzero generator coefficient of C.
MeasurementPlan plan_from_operator(const CorrelationOperator &c);

struct SampleResult {
    double estimate = 0.0;
    /// Per-term sample standard deviation / sqrt(shots), combined in quadrature with the coefficients.
    double standard_error = 0.0;
    uint64_t shots_per_term = 0;
    uint64_t seed = 0;

    friend bool operator==(const SampleResult &, const SampleResult &) = default;
};

/// Outcome distribution of one term: product eigenvalues and their Born probabilities.
struct OutcomeDistribution {
    std::vector<double> values;
    std::vector<double> probabilities;

    double mean() const;
};

/// Joint Born distribution of measuring obs_a on A and obs_b on B. Degenerate eigenvalues are
/// merged by summing over the eigenspace.
OutcomeDistribution outcome_distribution(const FloatMatrix &obs_a, const FloatMatrix &obs_b, const FloatVector &s);

/**
 * Monte Carlo estimate of <s|C|s> from simulated local projective measurements.
 *
 * Shot n of term t draws its uniform from Philox4x32-10 with key = seed and
 * counter = (n, t), so results are bit-identical for fixed (plan, s, shots, seed).
 * Throws ShotsZero, NotNormalized or DimensionMismatch.
 */
SampleResult estimate(const MeasurementPlan &plan, const ExactVector &s, uint64_t shots, uint64_t seed);
SampleResult estimate(const MeasurementPlan &plan, const FloatVector &s, uint64_t shots, uint64_t seed);

/// Runs shards k = 1..K with seed ^ k, concurrently when `parallel`, and merges them in k order.
/// The result does not depend on `parallel`.
SampleResult estimate_sharded(const MeasurementPlan &plan, const ExactVector &s, uint64_t shots, uint64_t seed,
                              unsigned shards, bool parallel = true);

}  // namespace qutrit

#endif  // QUTRIT_SAMPLER_HPP
