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

#ifndef QUTRIT_EXACT_HPP
#define QUTRIT_EXACT_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qutrit {

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q", even for integers ("3/1", "0/1").
std::string rational_fraction_string(const Rational &r);

/**
 * An element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of the real field Q(sqrt2, sqrt3).
 *
 * The basis {1, sqrt2, sqrt3, sqrt6} is linearly independent over Q, so two
 * values are equal iff their components are equal. Denominators are always
 * rationalized: 1/sqrt2 is stored as (0, 1/2, 0, 0).
 */
class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(long value);  // NOLINT(google-explicit-constructor)
    ExactScalar(Rational a);  // NOLINT(google-explicit-constructor)
    ExactScalar(Rational a, Rational b, Rational c, Rational d);

    static ExactScalar sqrt2();
    static ExactScalar sqrt3();
    static ExactScalar sqrt6();
    static ExactScalar rational(long num, long den);

    const Rational &a() const { return parts_[0]; }
    const Rational &b() const { return parts_[1]; }
    const Rational &c() const { return parts_[2]; }
    const Rational &d() const { return parts_[3]; }
    const std::array<Rational, 4> &parts() const { return parts_; }

    bool is_zero() const;
    bool is_rational() const;

    /// Exact sign (-1, 0, +1), decided without floating point.
    int sign() const;

    ExactScalar operator-() const;
    ExactScalar &operator+=(const ExactScalar &other);
    ExactScalar &operator-=(const ExactScalar &other);
    ExactScalar &operator*=(const ExactScalar &other);
    ExactScalar &operator/=(const ExactScalar &other);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar &y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar &y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar &y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar &y) { return x /= y; }

    friend bool operator==(const ExactScalar &x, const ExactScalar &y) { return x.parts_ == y.parts_; }
    friend std::strong_ordering operator<=>(const ExactScalar &x, const ExactScalar &y);

   private:
    std::array<Rational, 4> parts_{};
};

/// Multiplicative inverse via the 4x4 rational system "x * v = 1". Throws ZeroDivision.
ExactScalar invert(const ExactScalar &x);
ExactScalar abs(const ExactScalar &x);
double to_float(const ExactScalar &x);

/// Square root of a non-negative rational when it lies in the field, i.e. when
/// x/k is a rational square for some k in {1, 2, 3, 6}. Irrational inputs yield nullopt.
std::optional<ExactScalar> exact_sqrt(const ExactScalar &x);

/// Human-readable form such as "2√2", "-√6/12" or "1/3 + √2".
std::string to_string(const ExactScalar &x);
std::ostream &operator<<(std::ostream &out, const ExactScalar &x);

/// Complexification of ExactScalar as a (re, im) pair.
class ExactComplex {
   public:
    ExactComplex() = default;
    ExactComplex(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(ExactScalar re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(ExactScalar re, ExactScalar im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return {ExactScalar{}, ExactScalar{1}}; }

    const ExactScalar &re() const { return re_; }
    const ExactScalar &im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ExactComplex conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2, an exact non-negative scalar.
    ExactScalar norm_squared() const { return re_ * re_ + im_ * im_; }

    ExactComplex operator-() const { return {-re_, -im_}; }
    ExactComplex &operator+=(const ExactComplex &other);
    ExactComplex &operator-=(const ExactComplex &other);
    ExactComplex &operator*=(const ExactComplex &other);
    ExactComplex &operator/=(const ExactComplex &other);

    friend ExactComplex operator+(ExactComplex x, const ExactComplex &y) { return x += y; }
    friend ExactComplex operator-(ExactComplex x, const ExactComplex &y) { return x -= y; }
    friend ExactComplex operator*(ExactComplex x, const ExactComplex &y) { return x *= y; }
    friend ExactComplex operator/(ExactComplex x, const ExactComplex &y) { return x /= y; }
    friend bool operator==(const ExactComplex &x, const ExactComplex &y) = default;

   private:
    ExactScalar re_;
    ExactScalar im_;
};

inline ExactComplex conj(const ExactComplex &z) { return z.conj(); }
std::string to_string(const ExactComplex &z);
std::ostream &operator<<(std::ostream &out, const ExactComplex &z);

}  // namespace qutrit

#endif  // QUTRIT_EXACT_HPP
