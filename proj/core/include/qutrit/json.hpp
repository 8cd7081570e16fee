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

#ifndef QUTRIT_JSON_HPP
#define QUTRIT_JSON_HPP

#include <nlohmann/json.hpp>

#include "qutrit/exact.hpp"
#include "qutrit/generators.hpp"
#include "qutrit/linalg.hpp"
#include "qutrit/sampler.hpp"
#include "qutrit/states.hpp"

namespace qutrit {

// ExactScalar: {"a":"p/q","b":"p/q","c":"p/q","d":"p/q"}
void to_json(nlohmann::json &j, const ExactScalar &x);
void from_json(const nlohmann::json &j, ExactScalar &x);

// ExactComplex: {"re": ExactScalar, "im": ExactScalar}
void to_json(nlohmann::json &j, const ExactComplex &z);
void from_json(const nlohmann::json &j, ExactComplex &z);

// Matrix: {"rows":n,"cols":n,"mode":"exact|float","entries":[[{"re":..,"im":..},..],..]}.
// Decoding throws ModeMismatch when "mode" disagrees with the target type.
void to_json(nlohmann::json &j, const ExactMatrix &m);
void from_json(const nlohmann::json &j, ExactMatrix &m);
void to_json(nlohmann::json &j, const FloatMatrix &m);
void from_json(const nlohmann::json &j, FloatMatrix &m);

void to_json(nlohmann::json &j, const ExactVector &v);
void to_json(nlohmann::json &j, const FloatVector &v);

// AmplitudeSet: {"basis":"computational|su3","values":[ExactComplex x 9]}
void to_json(nlohmann::json &j, const AmplitudeSet &a);
void from_json(const nlohmann::json &j, AmplitudeSet &a);

void to_json(nlohmann::json &j, const SampleResult &r);
void from_json(const nlohmann::json &j, SampleResult &r);

/// Nonzero terms as [{"l":..,"m":..,"value":ExactComplex,"float":..}].
nlohmann::json coefficients_to_json(const GeneratorCoefficients &c);

}  // namespace qutrit

#endif  // QUTRIT_JSON_HPP
