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

#include "qutrit/json.hpp"

#include <string>

#include "qutrit/error.hpp"

namespace qutrit {

namespace {

const nlohmann::json &require(const nlohmann::json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

template <class T, class Decode>
Matrix<T> decode_matrix(const nlohmann::json &j, Mode expected, Decode decode) {
    std::string mode = require(j, "mode").get<std::string>();
    if (mode != mode_name(expected)) {
        throw ModeMismatch("matrix mode '" + mode + "' but '" + std::string(mode_name(expected)) + "' expected");
    }
    size_t rows = require(j, "rows").get<size_t>();
    size_t cols = require(j, "cols").get<size_t>();
    const auto &entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows) throw DimensionMismatch("matrix row count mismatch");
    Matrix<T> out(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols) throw DimensionMismatch("matrix column count mismatch");
        for (size_t jj = 0; jj < cols; ++jj) out(i, jj) = decode(entries[i][jj]);
    }
    return out;
}

template <class T, class Encode>
nlohmann::json encode_matrix(const Matrix<T> &m, Encode encode) {
    nlohmann::json entries = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t jj = 0; jj < m.cols(); ++jj) row.push_back(encode(m(i, jj)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"mode", std::string(mode_name(Matrix<T>::mode))}, {"entries", entries}};
}

nlohmann::json float_complex(const FloatComplex &z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

void to_json(nlohmann::json &j, const ExactScalar &x) {
    j = {{"a", rational_fraction_string(x.a())},
         {"b", rational_fraction_string(x.b())},
         {"c", rational_fraction_string(x.c())},
         {"d", rational_fraction_string(x.d())}};
}

void from_json(const nlohmann::json &j, ExactScalar &x) {
    auto part = [&](const char *key) {
        const auto &v = require(j, key);
        if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a fraction string");
        return parse_rational(v.get<std::string>());
    };
    x = ExactScalar(part("a"), part("b"), part("c"), part("d"));
}

void to_json(nlohmann::json &j, const ExactComplex &z) { j = {{"re", z.re()}, {"im", z.im()}}; }

void from_json(const nlohmann::json &j, ExactComplex &z) {
    z = ExactComplex(require(j, "re").get<ExactScalar>(), require(j, "im").get<ExactScalar>());
}

void to_json(nlohmann::json &j, const ExactMatrix &m) {
    j = encode_matrix(m, [](const ExactComplex &z) { return nlohmann::json(z); });
}

void from_json(const nlohmann::json &j, ExactMatrix &m) {
    m = decode_matrix<ExactComplex>(j, Mode::Exact, [](const nlohmann::json &e) { return e.get<ExactComplex>(); });
}

void to_json(nlohmann::json &j, const FloatMatrix &m) { j = encode_matrix(m, float_complex); }

void from_json(const nlohmann::json &j, FloatMatrix &m) {
    m = decode_matrix<FloatComplex>(j, Mode::Float, [](const nlohmann::json &e) {
        return FloatComplex(require(e, "re").get<double>(), require(e, "im").get<double>());
    });
}

void to_json(nlohmann::json &j, const ExactVector &v) {
    j = nlohmann::json::array();
    for (const auto &a : v.amplitudes()) j.push_back(a);
}

void to_json(nlohmann::json &j, const FloatVector &v) {
    j = nlohmann::json::array();
    for (const auto &a : v.amplitudes()) j.push_back(float_complex(a));
}

void to_json(nlohmann::json &j, const AmplitudeSet &a) {
    j = {{"basis", a.basis == AmplitudeBasis::Computational ? "computational" : "su3"},
         {"values", nlohmann::json::array()}};
    for (const auto &v : a.values) j["values"].push_back(v);
}

void from_json(const nlohmann::json &j, AmplitudeSet &a) {
    std::string basis = require(j, "basis").get<std::string>();
    if (basis == "computational") {
        a.basis = AmplitudeBasis::Computational;
    } else if (basis == "su3") {
        a.basis = AmplitudeBasis::SU3;
    } else {
        throw ParseError("unknown amplitude basis '" + basis + "'");
    }
    const auto &values = require(j, "values");
    if (!values.is_array() || values.size() != 9) throw DimensionMismatch("amplitude set needs exactly 9 values");
    for (size_t k = 0; k < 9; ++k) a.values[k] = values[k].get<ExactComplex>();
}

void to_json(nlohmann::json &j, const SampleResult &r) {
    j = {{"estimate", r.estimate}, {"stderr", r.standard_error}, {"shots_per_term", r.shots_per_term}, {"seed", r.seed}};
}

void from_json(const nlohmann::json &j, SampleResult &r) {
    r.estimate = require(j, "estimate").get<double>();
    r.standard_error = require(j, "stderr").get<double>();
    r.shots_per_term = require(j, "shots_per_term").get<uint64_t>();
    r.seed = require(j, "seed").get<uint64_t>();
}

nlohmann::json coefficients_to_json(const GeneratorCoefficients &c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &t : c.nonzero_terms()) {
        out.push_back({{"l", t.l},
                       {"m", t.m},
                       {"value", t.coefficient},
                       {"display", to_string(t.coefficient)},
                       {"float", to_float(t.coefficient.re())}});
    }
    return out;
}

}  // namespace qutrit
