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

#include "qutrit/sampler.hpp"

#include <cmath>
#include <thread>

#include "qutrit/error.hpp"
#include "qutrit/generators.hpp"
#include "qutrit/philox.hpp"

namespace qutrit {

namespace {

constexpr double kDegeneracyTol = 1e-9;

struct Eigenspace {
    double value;
    std::vector<size_t> columns;
};

std::vector<Eigenspace> eigenspaces(const HermitianEigen &eig) {
    std::vector<Eigenspace> out;
    for (size_t k = 0; k < eig.values.size(); ++k) {
        if (!out.empty() && std::abs(out.back().value - eig.values[k]) < kDegeneracyTol) {
            out.back().columns.push_back(k);
        } else {
            out.push_back({eig.values[k], {k}});
        }
    }
    return out;
}

struct TermStats {
    double mean;
    double variance;
};

TermStats sample_term(const OutcomeDistribution &dist, uint64_t shots, uint64_t seed, uint32_t term) {
    std::vector<double> cdf(dist.probabilities.size());
    double total = 0.0;
    for (size_t k = 0; k < cdf.size(); ++k) {
        total += dist.probabilities[k];
        cdf[k] = total;
    }
    const Philox4x32::Key key = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
    std::vector<uint64_t> counts(cdf.size());
    for (uint64_t n = 0; n < shots; ++n) {
        double u = total * Philox4x32::uniform({static_cast<uint32_t>(n), static_cast<uint32_t>(n >> 32), term, 0}, key);
        size_t k = 0;
        while (k + 1 < cdf.size() && u >= cdf[k]) ++k;
        ++counts[k];
    }
    const double n = static_cast<double>(shots);
    double mean = 0.0;
    for (size_t k = 0; k < counts.size(); ++k) mean += static_cast<double>(counts[k]) * dist.values[k];
    mean /= n;
    double squares = 0.0;
    for (size_t k = 0; k < counts.size(); ++k) {
        double dev = dist.values[k] - mean;
        squares += static_cast<double>(counts[k]) * dev * dev;
    }
    return {mean, shots > 1 ? squares / (n - 1.0) : 0.0};
}

}  // namespace

ExactMatrix MeasurementPlan::reconstruct() const {
    size_t n = local_dim(group) * local_dim(group);
    ExactMatrix out(n, n);
    for (const auto &t : terms) out += ExactComplex(t.coefficient) * kron(t.obs_a, t.obs_b);
    return out;
}

MeasurementPlan plan_from_operator(const CorrelationOperator &c) {
    GeneratorCoefficients coefficients = generator_decomposition(c);
    const auto &set = generator_set(c.group());
    MeasurementPlan plan{c.group(), {}};
    for (const auto &term : coefficients.nonzero_terms()) {
        if (!term.coefficient.is_real()) throw NotHermitian("generator coefficient is not real");
        plan.terms.push_back({term.coefficient.re(), term.l, term.m, set.elements[term.l], set.elements[term.m]});
    }
    return plan;
}

double OutcomeDistribution::mean() const {
    double out = 0.0;
    for (size_t k = 0; k < values.size(); ++k) out += values[k] * probabilities[k];
    return out;
}

OutcomeDistribution outcome_distribution(const FloatMatrix &obs_a, const FloatMatrix &obs_b, const FloatVector &s) {
    const size_t da = obs_a.rows();
    const size_t db = obs_b.rows();
    if (s.dim() != da * db) throw DimensionMismatch("state dimension does not match the observables");
    HermitianEigen eig_a = eig_hermitian(obs_a);
    HermitianEigen eig_b = eig_hermitian(obs_b);

    // amp(i, j) = <a_i (x) b_j | s>
    FloatMatrix amp(da, db);
    for (size_t i = 0; i < da; ++i) {
        for (size_t j = 0; j < db; ++j) {
            FloatComplex sum = 0.0;
            for (size_t x = 0; x < da; ++x) {
                for (size_t y = 0; y < db; ++y) {
                    sum += std::conj(eig_a.vectors(x, i)) * std::conj(eig_b.vectors(y, j)) * s[x * db + y];
                }
            }
            amp(i, j) = sum;
        }
    }

    OutcomeDistribution out;
    for (const auto &space_a : eigenspaces(eig_a)) {
        for (const auto &space_b : eigenspaces(eig_b)) {
            double p = 0.0;
            for (size_t i : space_a.columns) {
                for (size_t j : space_b.columns) p += std::norm(amp(i, j));
            }
            out.values.push_back(space_a.value * space_b.value);
            out.probabilities.push_back(p);
        }
    }
    return out;
}

SampleResult estimate(const MeasurementPlan &plan, const FloatVector &s, uint64_t shots, uint64_t seed) {
    if (shots == 0) throw ShotsZero("estimate: shots must be at least 1");
    if (!is_normalized(s, 1e-12)) throw NotNormalized("estimate: state is not normalized");
    SampleResult out{0.0, 0.0, shots, seed};
    double variance = 0.0;
    for (size_t t = 0; t < plan.terms.size(); ++t) {
        const auto &term = plan.terms[t];
        OutcomeDistribution dist = outcome_distribution(to_float(term.obs_a), to_float(term.obs_b), s);
        TermStats stats = sample_term(dist, shots, seed, static_cast<uint32_t>(t));
        double c = to_float(term.coefficient);
        out.estimate += c * stats.mean;
        variance += c * c * stats.variance / static_cast<double>(shots);
    }
    out.standard_error = std::sqrt(variance);
    return out;
}

SampleResult estimate(const MeasurementPlan &plan, const ExactVector &s, uint64_t shots, uint64_t seed) {
    if (!is_normalized(s)) throw NotNormalized("estimate: state is not normalized");
    return estimate(plan, to_float(s), shots, seed);
}

SampleResult estimate_sharded(const MeasurementPlan &plan, const ExactVector &s, uint64_t shots, uint64_t seed,
                              unsigned shards, bool parallel) {
    if (shards == 0) throw ShotsZero("estimate_sharded: at least one shard is required");
    if (shots == 0) throw ShotsZero("estimate: shots must be at least 1");
    if (!is_normalized(s)) throw NotNormalized("estimate: state is not normalized");
    const FloatVector state = to_float(s);
    std::vector<SampleResult> results(shards);
    auto run = [&](unsigned k) { results[k] = estimate(plan, state, shots, seed ^ (k + 1)); };
    if (parallel) {
        std::vector<std::jthread> workers;
        for (unsigned k = 0; k < shards; ++k) workers.emplace_back(run, k);
    } else {
        for (unsigned k = 0; k < shards; ++k) run(k);
    }

    SampleResult merged{0.0, 0.0, shots * shards, seed};
    double variance = 0.0;
    for (const auto &r : results) {
        merged.estimate += r.estimate;
        variance += r.standard_error * r.standard_error;
    }
    merged.estimate /= shards;
    merged.standard_error = std::sqrt(variance) / shards;
    return merged;
}

}  // namespace qutrit
