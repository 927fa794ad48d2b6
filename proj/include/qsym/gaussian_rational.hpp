// Copyright 2026 The qsym Authors
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

#ifndef QSYM_GAUSSIAN_RATIONAL_HPP
#define QSYM_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qsym {

using Rational = mpq_class;

/// Exact complex number re + im*i with arbitrary precision rational parts.
///
/// GMP keeps every mpq_class canonical (positive denominator, lowest terms)
/// after each operation, so structural equality is value equality.
class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational &re() const noexcept { return re_; }
    const Rational &im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always a nonnegative rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; the caller guarantees a nonzero value.
    GaussianRational inverse() const;

    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b);
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }

    /// Lexicographic on (re, im). Only meant for ordered containers.
    friend bool operator<(const GaussianRational &a, const GaussianRational &b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : a.im_ < b.im_;
    }

    /// Canonical text form: "0", "-3/4", "i", "-2*i", "1/2-3*i".
    std::string to_string() const;
    /// Accepts exactly the forms produced by to_string plus optional
    /// whitespace and an explicit leading '+'. Throws ParseError.
    static GaussianRational parse(std::string_view text);

   private:
    Rational re_;
    Rational im_;
};

std::string rational_to_string(const Rational &q);

}  // namespace qsym

#endif  // QSYM_GAUSSIAN_RATIONAL_HPP
