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

#include "qutrit/exact.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "qutrit/error.hpp"

namespace qutrit {

namespace {

constexpr double kSqrt6 = 2.449489742783178098197284074705891391965947480656670128432692567;

int sgn(const Rational &r) { return ::sgn(r); }

// Sign of u + v*sqrt(2).
int sign_sqrt2(const Rational &u, const Rational &v) {
    int su = sgn(u);
    int sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return su == 0 ? sv : su;
    Rational diff = u * u - 2 * v * v;
    return su * sgn(diff);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](std::string_view part) {
        if (part.empty()) return false;
        size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) return false;
        for (size_t k = start; k < part.size(); ++k) {
            if (part[k] < '0' || part[k] > '9') return false;
        }
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed rational '" + s + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rational_fraction_string(const Rational &r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ExactScalar::ExactScalar(long value) { parts_[0] = value; }

ExactScalar::ExactScalar(Rational a) { parts_[0] = std::move(a); }

ExactScalar::ExactScalar(Rational a, Rational b, Rational c, Rational d)
    : parts_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (auto &p : parts_) p.canonicalize();
}

ExactScalar ExactScalar::sqrt2() { return {0, 1, 0, 0}; }
ExactScalar ExactScalar::sqrt3() { return {0, 0, 1, 0}; }
ExactScalar ExactScalar::sqrt6() { return {0, 0, 0, 1}; }

ExactScalar ExactScalar::rational(long num, long den) {
    if (den == 0) throw ZeroDivision("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return ExactScalar(std::move(r));
}

bool ExactScalar::is_zero() const {
    for (const auto &p : parts_) {
        if (p != 0) return false;
    }
    return true;
}

bool ExactScalar::is_rational() const { return parts_[1] == 0 && parts_[2] == 0 && parts_[3] == 0; }

int ExactScalar::sign() const {
    // x = P + sqrt3*Q with P = a + b*sqrt2 and Q = c + d*sqrt2.
    int sp = sign_sqrt2(parts_[0], parts_[1]);
    int sq = sign_sqrt2(parts_[2], parts_[3]);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare P^2 with 3*Q^2, both in Q(sqrt2).
    const auto &[a, b, c, d] = parts_;
    Rational u = a * a + 2 * b * b - 3 * c * c - 6 * d * d;
    Rational v = 2 * a * b - 6 * c * d;
    return sp * sign_sqrt2(u, v);
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar out = *this;
    for (auto &p : out.parts_) p = -p;
    return out;
}

ExactScalar &ExactScalar::operator+=(const ExactScalar &other) {
    for (int k = 0; k < 4; ++k) parts_[k] += other.parts_[k];
    return *this;
}

ExactScalar &ExactScalar::operator-=(const ExactScalar &other) {
    for (int k = 0; k < 4; ++k) parts_[k] -= other.parts_[k];
    return *this;
}

ExactScalar &ExactScalar::operator*=(const ExactScalar &other) {
    const auto &[a, b, c, d] = parts_;
    const auto &[e, f, g, h] = other.parts_;
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2sqrt3, sqrt3*sqrt6 = 3sqrt2, sqrt6^2 = 6.
    Rational r1 = a * e + 2 * b * f + 3 * c * g + 6 * d * h;
    Rational r2 = a * f + b * e + 3 * (c * h + d * g);
    Rational r3 = a * g + c * e + 2 * (b * h + d * f);
    Rational r6 = a * h + d * e + b * g + c * f;
    parts_ = {std::move(r1), std::move(r2), std::move(r3), std::move(r6)};
    return *this;
}

ExactScalar &ExactScalar::operator/=(const ExactScalar &other) { return *this *= invert(other); }

std::strong_ordering operator<=>(const ExactScalar &x, const ExactScalar &y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExactScalar invert(const ExactScalar &x) {
    if (x.is_zero()) throw ZeroDivision("inverse of zero");
    // Column j of the system holds the components of x * basis_j.
    const std::array<ExactScalar, 4> basis = {ExactScalar(1), ExactScalar::sqrt2(), ExactScalar::sqrt3(),
                                              ExactScalar::sqrt6()};
    std::array<std::array<Rational, 5>, 4> aug;
    for (int j = 0; j < 4; ++j) {
        ExactScalar col = x * basis[j];
        for (int i = 0; i < 4; ++i) aug[i][j] = col.parts()[i];
    }
    for (int i = 0; i < 4; ++i) aug[i][4] = i == 0 ? 1 : 0;

    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && aug[pivot][col] == 0) ++pivot;
        if (pivot == 4) throw ZeroDivision("singular multiplication map");
        std::swap(aug[col], aug[pivot]);
        Rational inv = 1 / aug[col][col];
        for (auto &v : aug[col]) v *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == col || aug[row][col] == 0) continue;
            Rational factor = aug[row][col];
            for (int k = col; k < 5; ++k) aug[row][k] -= factor * aug[col][k];
        }
    }
    return {aug[0][4], aug[1][4], aug[2][4], aug[3][4]};
}

ExactScalar abs(const ExactScalar &x) { return x.sign() < 0 ? -x : x; }

std::optional<ExactScalar> exact_sqrt(const ExactScalar &x) {
    if (!x.is_rational() || x.a() < 0) return std::nullopt;
    if (x.is_zero()) return ExactScalar{};
    for (long k : {1L, 2L, 3L, 6L}) {
        Rational q = x.a() / k;
        q.canonicalize();
        if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) continue;
        Rational root(sqrt(q.get_num()), sqrt(q.get_den()));
        root.canonicalize();
        switch (k) {
            case 1:
                return ExactScalar(root);
            case 2:
                return ExactScalar(0, root, 0, 0);
            case 3:
                return ExactScalar(0, 0, root, 0);
            default:
                return ExactScalar(0, 0, 0, root);
        }
    }
    return std::nullopt;
}

double to_float(const ExactScalar &x) {
    return x.a().get_d() + x.b().get_d() * std::numbers::sqrt2 + x.c().get_d() * std::numbers::sqrt3 +
           x.d().get_d() * kSqrt6;
}

std::string to_string(const ExactScalar &x) {
    if (x.is_zero()) return "0";
    static constexpr const char *radicals[4] = {"", "√2", "√3", "√6"};
    std::string out;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const Rational &r = x.parts()[k];
        if (r == 0) continue;
        bool negative = r < 0;
        mpz_class num = abs(r.get_num());
        const mpz_class &den = r.get_den();
        std::string term;
        if (k == 0) {
            term = num.get_str();
        } else {
            term = (num == 1 ? std::string() : num.get_str()) + radicals[k];
        }
        if (den != 1) term += "/" + den.get_str();
        if (first) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
        first = false;
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const ExactScalar &x) { return out << to_string(x); }

ExactComplex &ExactComplex::operator+=(const ExactComplex &other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
}

ExactComplex &ExactComplex::operator-=(const ExactComplex &other) {
    re_ -= other.re_;
    im_ -= other.im_;
    return *this;
}

ExactComplex &ExactComplex::operator*=(const ExactComplex &other) {
    if (im_.is_zero() && other.im_.is_zero()) {
        re_ *= other.re_;
        return *this;
    }
    ExactScalar re = re_ * other.re_ - im_ * other.im_;
    ExactScalar im = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex &ExactComplex::operator/=(const ExactComplex &other) {
    ExactScalar denom = other.norm_squared();
    if (denom.is_zero()) throw ZeroDivision("complex division by zero");
    ExactScalar inv = invert(denom);
    *this *= other.conj();
    re_ *= inv;
    im_ *= inv;
    return *this;
}

std::string to_string(const ExactComplex &z) {
    if (z.im().is_zero()) return to_string(z.re());
    auto wrap = [](const ExactScalar &s) {
        std::string t = to_string(s);
        bool compound = t.find(" + ") != std::string::npos || t.find(" - ") != std::string::npos;
        return compound ? "(" + t + ")" : t;
    };
    std::string im = z.im() == ExactScalar(1) ? "i" : z.im() == ExactScalar(-1) ? "-i" : wrap(z.im()) + "i";
    if (z.re().is_zero()) return im;
    if (im[0] == '-') return wrap(z.re()) + " - " + im.substr(1);
    return wrap(z.re()) + " + " + im;
}

std::ostream &operator<<(std::ostream &out, const ExactComplex &z) { return out << to_string(z); }

}  // namespace qutrit
