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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qutrit/correlations.hpp"
#include "qutrit/density.hpp"
#include "qutrit/errata.hpp"
#include "qutrit/json.hpp"
#include "qutrit/sampler.hpp"
#include "qutrit/states.hpp"
#include "report.hpp"

namespace qutrit::cli {

namespace {

using nlohmann::json;

constexpr uint64_t kDefaultSeed = 42;

/// Bad input detected after argument parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Markdown };

struct Options {
    std::string format = "markdown";
    std::string mode = "exact";
    std::string out;

    Format fmt() const { return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Markdown; }
    bool exact() const { return mode == "exact"; }
};

struct Output {
    json doc;
    /// Markdown sections.
    std::vector<Table> sections;
    /// The single rectangular table emitted for --format csv.
    Table csv;
    int status = kOk;
};

std::string show(const ExactScalar &x, bool exact) { return exact ? to_string(x) : format_double(to_float(x)); }

std::string show(const ExactComplex &z, bool exact) {
    if (exact) return to_string(z);
    FloatComplex f = to_float(z);
    if (f.imag() == 0.0) return format_double(f.real());
    std::string im = format_double(std::abs(f.imag())) + "i";
    if (f.real() == 0.0) return (f.imag() < 0 ? "-" : "") + im;
    return format_double(f.real()) + (f.imag() < 0 ? " - " : " + ") + im;
}

json value_json(const ExactScalar &x, bool exact) { return exact ? json(x) : json(to_float(x)); }

json value_json(const ExactComplex &z, bool exact) {
    if (exact) return z;
    FloatComplex f = to_float(z);
    return {{"re", f.real()}, {"im", f.imag()}};
}

json matrix_json(const ExactMatrix &m, bool exact) { return exact ? json(m) : json(to_float(m)); }

Table matrix_table(const std::string &title, const ExactMatrix &m, bool exact, size_t local = 0) {
    auto index_name = [local](size_t k) {
        if (local == 0) return std::to_string(k);
        return std::to_string(k / local) + std::to_string(k % local);
    };
    Table t{title, "", {""}, {}};
    for (size_t j = 0; j < m.cols(); ++j) t.headers.push_back(index_name(j));
    for (size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row = {index_name(i)};
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(show(m(i, j), exact));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string ket_expansion(const ExactVector &v, size_t local, bool exact) {
    std::string out;
    for (size_t k = 0; k < v.dim(); ++k) {
        if (v[k].is_zero()) continue;
        std::string amp = show(v[k], exact);
        bool negative = amp[0] == '-';
        if (negative) amp.erase(0, 1);
        if (amp.find(' ') != std::string::npos) amp = "(" + amp + ")";
        std::string ket = "|" + std::to_string(k / local) + std::to_string(k % local) + ">";
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        out += amp + " " + ket;
    }
    return out;
}

std::string generator_symbol(Group g, size_t k) { return (g == Group::SU2 ? "sigma" : "lambda") + std::to_string(k); }

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

json erratum_json(const Erratum &e) {
    json rows = json::array();
    for (const auto &r : e.rows) {
        rows.push_back({{"item", r.item},
                        {"published", r.published},
                        {"computed", r.computed},
                        {"delta", r.delta},
                        {"matches", r.matches}});
    }
    return {{"id", e.id}, {"summary", e.summary}, {"mismatches", e.mismatches()}, {"rows", rows}};
}

Table erratum_table(const Erratum &e) {
    Table t{e.id, e.summary, {"item", "published", "computed", "delta", "matches"}, {}};
    for (const auto &r : e.rows) t.rows.push_back({r.item, r.published, r.computed, r.delta, r.matches ? "yes" : "no"});
    return t;
}

// ---- generators dump ----------------------------------------------------------------------------

Output generators_dump(const Options &opt, Group group) {
    const bool exact = opt.exact();
    const auto &set = generator_set(group);
    Output o;
    o.doc = {{"group", group_name(group)}, {"mode", opt.mode}, {"generators", json::array()}};
    o.csv.headers = {"generator", "row", "col", "value"};
    Table norms{"Hilbert-Schmidt norms", "Tr[g_k^2] for each generator.", {"generator", "norm"}, {}};
    for (size_t k = 0; k < set.size(); ++k) {
        const std::string name = generator_symbol(group, k);
        o.doc["generators"].push_back(
            {{"index", k}, {"hs_norm", value_json(set.hs_norms[k], exact)}, {"matrix", matrix_json(set.elements[k], exact)}});
        o.sections.push_back(matrix_table(name, set.elements[k], exact));
        norms.rows.push_back({name, show(set.hs_norms[k], exact)});
        for (size_t i = 0; i < set.elements[k].rows(); ++i) {
            for (size_t j = 0; j < set.elements[k].cols(); ++j) {
                o.csv.rows.push_back({name, std::to_string(i), std::to_string(j), show(set.elements[k](i, j), exact)});
            }
        }
    }
    o.sections.push_back(norms);
    if (group == Group::SU3) {
        const auto &sc = structure_constants();
        Table f{"Structure constants f", "Nonzero f_lmn with l < m < n; f is totally antisymmetric.", {"l", "m", "n", "f"}, {}};
        Table d{"Structure constants d", "Nonzero d_lmn with l <= m <= n; d is totally symmetric.", {"l", "m", "n", "d"}, {}};
        json fj = json::array();
        json dj = json::array();
        for (int l = 1; l <= 8; ++l) {
            for (int m = l; m <= 8; ++m) {
                for (int n = m; n <= 8; ++n) {
                    std::vector<std::string> idx = {std::to_string(l), std::to_string(m), std::to_string(n)};
                    if (l < m && m < n && !sc.f(l, m, n).is_zero()) {
                        fj.push_back({{"l", l}, {"m", m}, {"n", n}, {"value", value_json(sc.f(l, m, n), exact)},
                                      {"display", to_string(sc.f(l, m, n))}});
                        auto row = idx;
                        row.push_back(show(sc.f(l, m, n), exact));
                        f.rows.push_back(row);
                    }
                    if (!sc.d(l, m, n).is_zero()) {
                        dj.push_back({{"l", l}, {"m", m}, {"n", n}, {"value", value_json(sc.d(l, m, n), exact)},
                                      {"display", to_string(sc.d(l, m, n))}});
                        auto row = idx;
                        row.push_back(show(sc.d(l, m, n), exact));
                        d.rows.push_back(row);
                    }
                }
            }
        }
        o.doc["structure_constants"] = {{"f", fj}, {"d", dj}};
        o.sections.push_back(f);
        o.sections.push_back(d);
    }
    return o;
}

// ---- states list ---------------------------------------------------------------------------------

Output states_list(const Options &opt, Group group) {
    const bool exact = opt.exact();
    const size_t local = local_dim(group);
    auto states = states_of(group);
    std::vector<ExactVector> vectors;
    for (const auto &s : states) vectors.push_back(s.vector);
    const bool orthonormal = gram_matrix<ExactComplex>(vectors) == ExactMatrix::identity(vectors.size());

    Output o;
    o.doc = {{"group", group_name(group)}, {"mode", opt.mode}, {"orthonormal", orthonormal}, {"states", json::array()}};
    Table t{"States (" + std::string(group_name(group)) + ")",
            std::string("Gram matrix equals the identity: ") + (orthonormal ? "yes" : "NO"),
            {"label", "generator", "state", "exchange class", "particle SWAP", "reduced purity", "entropy"},
            {}};
    for (const auto &s : states) {
        DensityMatrix reduced = reduce(density_of(s.vector, {local, local}), Subsystem::A);
        ExactScalar p = purity(reduced);
        double h = entropy(reduced);
        json vec = exact ? json(s.vector) : json(to_float(s.vector));
        o.doc["states"].push_back({{"label", label_name(s.label)},
                                   {"generator_index", s.generator_index},
                                   {"vector", vec},
                                   {"swap_symmetry", swap_symmetry_name(s.swap_symmetry)},
                                   {"particle_swap", swap_symmetry_name(s.particle_swap)},
                                   {"reduced_purity", value_json(p, exact)},
                                   {"entropy", h}});
        t.rows.push_back({std::string(label_name(s.label)), generator_symbol(group, s.generator_index),
                          ket_expansion(s.vector, local, exact), std::string(swap_symmetry_name(s.swap_symmetry)),
                          std::string(swap_symmetry_name(s.particle_swap)), show(p, exact), format_double(h)});
    }
    o.csv = t;
    o.sections.push_back(std::move(t));
    if (!orthonormal) o.status = kVerificationFailed;
    return o;
}

// ---- states basis-change -------------------------------------------------------------------------

json read_json_input(const std::string &path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open input file '" + path + "'");
        return json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("invalid JSON in '" + path + "': " + e.what());
    }
}

Output states_basis_change(const Options &opt, const std::string &input) {
    const bool exact = opt.exact();
    AmplitudeSet in;
    try {
        in = read_json_input(input).get<AmplitudeSet>();
    } catch (const json::exception &e) {
        throw UsageError(std::string("malformed amplitude set: ") + e.what());
    }
    const bool forward = in.basis == AmplitudeBasis::Computational;
    AmplitudeSet result = forward ? to_su3_basis(in) : from_su3_basis(in);

    Output o;
    if (exact) {
        o.doc = result;
    } else {
        o.doc = {{"basis", forward ? "su3" : "computational"}, {"values", json::array()}};
        for (const auto &v : result.values) o.doc["values"].push_back(value_json(v, false));
    }
    auto labels = labels_of(Group::SU3);
    auto name = [&](size_t k) {
        return forward ? "b(" + std::string(label_name(labels[k])) + ")"
                       : "c" + std::to_string(k / 3) + std::to_string(k % 3);
    };
    Table t{forward ? "SU(3)-basis amplitudes" : "Computational amplitudes",
            "Squared norm preserved: " + std::string(result.squared_norm() == in.squared_norm() ? "yes" : "NO"),
            {"amplitude", "value"},
            {}};
    for (size_t k = 0; k < 9; ++k) t.rows.push_back({name(k), show(result.values[k], exact)});
    o.csv = t;
    o.sections.push_back(std::move(t));
    if (forward) o.sections.push_back(erratum_table(basis_change_erratum(in)));
    return o;
}

// ---- density report ------------------------------------------------------------------------------

Output density_report(const Options &opt, Group group, std::optional<StateLabel> only) {
    const bool exact = opt.exact();
    const size_t local = local_dim(group);
    Output o;
    o.doc = {{"group", group_name(group)}, {"mode", opt.mode}, {"states", json::array()}};
    Table summary{"Reduced states", "rho_A = Tr_B |psi><psi|; entropy in bits.",
                  {"label", "reduced state", "purity", "spectrum", "entropy"}, {}};
    for (const auto &s : states_of(group)) {
        if (only && s.label != *only) continue;
        DensityMatrix rho_a = reduce(density_of(s.vector, {local, local}), Subsystem::A);
        ExactScalar p = purity(rho_a);
        std::vector<double> w = spectrum(rho_a);
        double h = entropy(rho_a);
        std::string eigenvalues;
        for (double x : w) eigenvalues += (eigenvalues.empty() ? "" : ", ") + format_double(x);
        o.doc["states"].push_back({{"label", label_name(s.label)},
                                   {"reduced", matrix_json(rho_a.matrix(), exact)},
                                   {"purity", value_json(p, exact)},
                                   {"spectrum", w},
                                   {"entropy", h}});
        std::string shown = matrix_to_string(rho_a.matrix());
        if (!exact) {
            FloatMatrix f = to_float(rho_a.matrix());
            std::ostringstream m;
            m << "[";
            for (size_t i = 0; i < f.rows(); ++i) {
                m << (i ? ", [" : "[");
                for (size_t j = 0; j < f.cols(); ++j) m << (j ? ", " : "") << format_double(f(i, j).real());
                m << "]";
            }
            m << "]";
            shown = m.str();
        }
        summary.rows.push_back({std::string(label_name(s.label)), shown, show(p, exact), eigenvalues, format_double(h)});
    }
    o.csv = summary;
    o.sections.push_back(std::move(summary));
    return o;
}

// ---- correlate verify ----------------------------------------------------------------------------

struct Check {
    std::string name;
    bool passed;
};

Output correlate_verify(const Options &opt, Group group) {
    const bool exact = opt.exact();
    const size_t local = local_dim(group);
    const CorrelationOperator c = correlation_operator(group);
    const auto basis = states_of(group);
    std::vector<Check> checks;
    Output o;
    o.csv.headers = {"section", "item", "value", "detail"};

    // Operator.
    const ExactMatrix published = group == Group::SU2 ? published_chsh_matrix() : published_qutrit_matrix();
    checks.push_back({"operator equals the published matrix", c.matrix() == published});
    o.sections.push_back(matrix_table("Operator", c.matrix(), exact, local));
    o.doc["group"] = group_name(group);
    o.doc["mode"] = opt.mode;
    o.doc["operator"] = matrix_json(c.matrix(), exact);

    // Eigenstructure.
    HermitianEigen eig = eig_hermitian(to_float(c.matrix()));
    std::vector<double> exact_values;
    Table eigen{"Eigenstructure", "", {"state", "eigenvalue", "exact eigenvector"}, {}};
    json eigenvectors = json::array();
    bool all_eigen = true;
    for (const auto &s : basis) {
        ExactScalar value = expectation(c, s.vector);
        bool is_eig = is_eigenvector(c, s.vector, value);
        all_eigen = all_eigen && is_eig;
        exact_values.push_back(to_float(value));
        eigenvectors.push_back({{"label", label_name(s.label)},
                                {"eigenvalue", value_json(value, exact)},
                                {"display", to_string(value)},
                                {"exact", is_eig}});
        eigen.rows.push_back({std::string(label_name(s.label)), show(value, exact), is_eig ? "yes" : "no"});
    }
    std::sort(exact_values.rbegin(), exact_values.rend());
    double spectrum_error = 0.0;
    for (size_t k = 0; k < exact_values.size(); ++k) {
        spectrum_error = std::max(spectrum_error, std::abs(exact_values[k] - eig.values[k]));
    }
    std::string float_spectrum;
    for (double w : eig.values) float_spectrum += (float_spectrum.empty() ? "" : ", ") + format_double(w);
    eigen.note = "Float eigenvalues: " + float_spectrum + ". Max deviation from the exact eigenvalues: " +
                 format_double(spectrum_error) + ".";
    checks.push_back({"basis states are exact eigenvectors", all_eigen});
    checks.push_back({"float spectrum matches the exact eigenvalues within 1e-10", spectrum_error < 1e-10});
    o.doc["eigenvalues"] = eig.values;
    o.doc["eigenvectors"] = eigenvectors;
    o.sections.push_back(eigen);
    for (const auto &r : eigen.rows) o.csv.rows.push_back({"eigenvector", r[0], r[1], r[2] == "yes" ? "exact" : "not exact"});

    // Orthonormality and projector coefficients.
    std::vector<ExactVector> vectors;
    for (const auto &s : basis) vectors.push_back(s.vector);
    checks.push_back({"basis is orthonormal", gram_matrix<ExactComplex>(vectors) == ExactMatrix::identity(vectors.size())});
    Table proj{"Projector coefficients", "C = sum_i a_i |psi_i><psi_i|.", {"state", "a_i"}, {}};
    json proj_json = json::array();
    try {
        ProjectorDecomposition p = solve_projector_coefficients(c, basis);
        checks.push_back({"basis diagonalizes the operator", true});
        checks.push_back({"projector decomposition reconstructs the operator", p.reconstruct() == c.matrix()});
        for (const auto &[label, a] : p.coefficients) {
            proj_json.push_back({{"label", label_name(label)}, {"value", value_json(a, exact)}, {"display", to_string(a)}});
            proj.rows.push_back({std::string(label_name(label)), show(a, exact)});
            o.csv.rows.push_back({"projector", std::string(label_name(label)), show(a, exact), ""});
        }
    } catch (const NotDiagonalizedByBasis &) {
        checks.push_back({"basis diagonalizes the operator", false});
    }
    o.doc["projector_coefficients"] = proj_json;
    o.sections.push_back(proj);

    // Generator coefficients.
    GeneratorCoefficients gc = generator_decomposition(c);
    checks.push_back({"generator decomposition reconstructs the operator", reconstruct(gc) == c.matrix()});
    Table gen{"Generator coefficients", "C = sum c_lm g_l (x) g_m over the nonzero terms.", {"term", "coefficient"}, {}};
    for (const auto &t : gc.nonzero_terms()) {
        std::string term = generator_symbol(group, t.l) + " (x) " + generator_symbol(group, t.m);
        gen.rows.push_back({term, show(t.coefficient, exact)});
        o.csv.rows.push_back({"generator", term, show(t.coefficient, exact), ""});
    }
    json gen_json = coefficients_to_json(gc);
    if (!exact) {
        for (auto &e : gen_json) e["value"] = e["float"];
    }
    o.doc["generator_coefficients"] = gen_json;
    o.sections.push_back(gen);

    // Bounds.
    BoundReport report = classify_bounds(c, basis);
    Table bounds{"Bound classification", "", {"state", "<C>", "float", "tier", "saturated"}, {}};
    json bounds_json = json::array();
    bool exceeded = false;
    bool saturated = true;
    for (const auto &e : report.entries) {
        exceeded = exceeded || e.bound_class == BoundClass::Exceeds;
        saturated = saturated && e.saturated;
        bounds_json.push_back({{"label", label_name(e.label)},
                               {"expectation", value_json(e.expectation, exact)},
                               {"display", to_string(e.expectation)},
                               {"float", to_float(e.expectation)},
                               {"tier", bound_class_name(e.bound_class)},
                               {"saturated", e.saturated}});
        bounds.rows.push_back({std::string(label_name(e.label)), show(e.expectation, exact),
                               format_double(to_float(e.expectation)), std::string(bound_class_name(e.bound_class)),
                               e.saturated ? "yes" : "no"});
        o.csv.rows.push_back({"bound", std::string(label_name(e.label)), show(e.expectation, exact),
                              std::string(bound_class_name(e.bound_class))});
    }
    bool table_matches = true;
    for (const auto &[label, value] : published_expectations(group)) {
        table_matches = table_matches && report.at(label).expectation == value;
    }
    checks.push_back({"expectations match the published table", table_matches});
    checks.push_back({"no state exceeds 2√2", !exceeded});
    checks.push_back({"every state saturates its tier", saturated});
    o.doc["bounds"] = bounds_json;
    o.sections.push_back(bounds);

    // Errata.
    std::vector<Erratum> errata = {generator_coefficient_comparison(group)};
    if (group == Group::SU3) {
        errata.push_back(lambda_coefficient_erratum());
        errata.push_back(tier_labels_erratum());
    }
    o.doc["errata"] = json::array();
    for (const auto &e : errata) {
        o.doc["errata"].push_back(erratum_json(e));
        o.sections.push_back(erratum_table(e));
        for (const auto &r : e.rows) {
            if (!r.matches) o.csv.rows.push_back({"erratum", e.id + ": " + r.item, r.computed, "published " + r.published});
        }
    }

    // Checks last in the document, first in the human-readable report.
    Table check_table{"Checks", "", {"check", "result"}, {}};
    json checks_json = json::array();
    bool all = true;
    for (const auto &ch : checks) {
        all = all && ch.passed;
        check_table.rows.push_back({ch.name, pass_fail(ch.passed)});
        checks_json.push_back({{"name", ch.name}, {"passed", ch.passed}});
        o.csv.rows.push_back({"check", ch.name, pass_fail(ch.passed), ""});
    }
    o.doc["checks"] = checks_json;
    o.doc["verified"] = all;
    o.sections.insert(o.sections.begin(), check_table);
    o.status = all ? kOk : kVerificationFailed;
    return o;
}

// ---- sample --------------------------------------------------------------------------------------

uint64_t default_seed() {
    const char *env = std::getenv("QUTRIT_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    try {
        size_t used = 0;
        uint64_t seed = std::stoull(env, &used, 0);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return seed;
    } catch (const std::exception &) {
        throw UsageError(std::string("QUTRIT_SEED is not an unsigned integer: '") + env + "'");
    }
}

struct SampleArgs {
    std::string state;
    std::optional<std::string> group;
    uint64_t shots = 100000;
    std::optional<uint64_t> seed;
    unsigned shards = 1;
};

Output sample(const Options &opt, const SampleArgs &args) {
    StateLabel label = parse_label(args.state);
    Group group = label_group(label);
    if (args.group && parse_group(*args.group) != group) {
        throw UsageError("state '" + args.state + "' does not belong to group " + *args.group);
    }
    if (args.shots == 0) throw UsageError("--shots must be at least 1");
    if (args.shards == 0) throw UsageError("--shards must be at least 1");
    const uint64_t seed = args.seed ? *args.seed : default_seed();
    const CorrelationOperator c = correlation_operator(group);
    const MeasurementPlan plan = plan_from_operator(c);
    const ExactVector &s = labeled_state(label).vector;

    SampleResult r;
    if (args.shards > 1) {
        r = estimate_sharded(plan, s, args.shots, seed, args.shards);
    } else {
        r = opt.exact() ? estimate(plan, s, args.shots, seed) : estimate(plan, to_float(s), args.shots, seed);
    }
    const ExactScalar exact_value = expectation(c, s);

    Output o;
    o.doc = r;
    o.csv = {"", "", {"estimate", "stderr", "shots_per_term", "seed"},
             {{format_double(r.estimate), format_double(r.standard_error), std::to_string(r.shots_per_term),
               std::to_string(r.seed)}}};
    Table t{"Sampled <C> on " + std::string(label_name(label)),
            std::to_string(plan.terms.size()) + " local-measurement terms, " + std::to_string(args.shards) +
                " shard(s).",
            {"estimate", "stderr", "shots per term", "seed", "exact", "|estimate - exact|"},
            {{format_double(r.estimate), format_double(r.standard_error), std::to_string(r.shots_per_term),
              std::to_string(r.seed), to_string(exact_value), format_double(std::abs(r.estimate - to_float(exact_value)))}}};
    o.sections.push_back(std::move(t));
    return o;
}

// ---- errata --------------------------------------------------------------------------------------

Output errata_report() {
    Output o;
    o.doc = {{"errata", json::array()}, {"notes", json::array()}};
    o.csv.headers = {"kind", "id", "item", "published", "computed", "delta", "matches"};
    auto add = [&](const std::vector<Erratum> &list, const char *kind, const char *key) {
        for (const auto &e : list) {
            o.doc[key].push_back(erratum_json(e));
            o.sections.push_back(erratum_table(e));
            for (const auto &r : e.rows) {
                o.csv.rows.push_back({kind, e.id, r.item, r.published, r.computed, r.delta, r.matches ? "yes" : "no"});
            }
        }
    };
    add(core_errata(), "erratum", "errata");
    add(convention_notes(), "note", "notes");
    return o;
}

// ---- driver --------------------------------------------------------------------------------------

void emit(const Output &o, Format format, std::ostream &out) {
    switch (format) {
        case Format::Json:
            out << o.doc.dump(2) << "\n";
            break;
        case Format::Csv:
            write_csv(out, o.csv);
            break;
        case Format::Markdown:
            for (const auto &t : o.sections) write_markdown(out, t);
            break;
    }
}

void add_global_options(CLI::App &app, Options &opt) {
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));
    app.add_option("--mode", opt.mode, "Arithmetic used for displayed values")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--out", opt.out, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact SU(2)/SU(3) correlation toolkit", "qutrit"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    add_global_options(app, opt);

    std::string group_text = "su3";
    auto group_option = [&](CLI::App *cmd) {
        cmd->add_option("--group", group_text, "su2 or su3")->check(CLI::IsMember({"su2", "su3"}, CLI::ignore_case));
    };

    auto *generators = app.add_subcommand("generators", "Generator matrices and structure constants");
    generators->require_subcommand(1);
    auto *dump = generators->add_subcommand("dump", "Print the generator set");
    group_option(dump);
    auto *dump_alias = app.add_subcommand("dump-generators", "Alias for `generators dump`");
    group_option(dump_alias);

    auto *states = app.add_subcommand("states", "Labeled basis states");
    states->require_subcommand(1);
    auto *list = states->add_subcommand("list", "List the labeled states");
    group_option(list);
    auto *basis_change = states->add_subcommand("basis-change", "Change between computational and SU(3) amplitudes");
    std::string input;
    basis_change->add_option("--input", input, "Amplitude-set JSON file, or - for stdin")->required();

    auto *density = app.add_subcommand("density", "Reduced density matrices");
    density->require_subcommand(1);
    auto *report = density->add_subcommand("report", "Purity, spectrum and entropy of reduced states");
    group_option(report);
    std::string density_state;
    report->add_option("--state", density_state, "Restrict the report to one state");

    auto *correlate = app.add_subcommand("correlate", "Correlation operators");
    correlate->require_subcommand(1);
    auto *verify = correlate->add_subcommand("verify", "Verify the correlation operator and its bounds");
    group_option(verify);

    auto *sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate of <C> from local measurements");
    SampleArgs sample_args;
    sample_cmd->add_option("--state", sample_args.state, "State label, e.g. phi+ or psi00")->required();
    sample_cmd->add_option("--group", sample_args.group, "su2 or su3 (inferred from the state)");
    sample_cmd->add_option("--shots", sample_args.shots, "Shots per measurement term");
    sample_cmd->add_option("--seed", sample_args.seed, "PRNG seed (default: $QUTRIT_SEED or 42)");
    sample_cmd->add_option("--shards", sample_args.shards, "Independent shards with seeds seed^k, run in parallel");

    auto *errata_cmd = app.add_subcommand("errata", "Discrepancies between published and computed values");

    for (CLI::App *cmd : {generators, dump, dump_alias, states, list, basis_change, density, report, correlate, verify,
                          sample_cmd, errata_cmd}) {
        cmd->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        Output o;
        if (*dump || *dump_alias) {
            o = generators_dump(opt, parse_group(group_text));
        } else if (*list) {
            o = states_list(opt, parse_group(group_text));
        } else if (*basis_change) {
            o = states_basis_change(opt, input);
        } else if (*report) {
            std::optional<StateLabel> only;
            if (!density_state.empty()) only = parse_label(density_state);
            Group group = parse_group(group_text);
            if (only && label_group(*only) != group) group = label_group(*only);
            o = density_report(opt, group, only);
        } else if (*verify) {
            o = correlate_verify(opt, parse_group(group_text));
        } else if (*sample_cmd) {
            o = sample(opt, sample_args);
        } else if (*errata_cmd) {
            if (!opt.exact()) throw UsageError("errata requires --mode exact");
            o = errata_report();
        }

        if (opt.out.empty()) {
            emit(o, opt.fmt(), out);
        } else {
            std::ofstream file(opt.out, std::ios::binary);
            if (!file) throw UsageError("cannot open output file '" + opt.out + "'");
            emit(o, opt.fmt(), file);
        }
        return o.status;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnknownLabel &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NotNormalized &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DimensionMismatch &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace qutrit::cli
