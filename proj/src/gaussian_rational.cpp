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

#include "qsym/gaussian_rational.hpp"

#include <cctype>
#include <optional>

#include "qsym/errors.hpp"

namespace qsym {

GaussianRational GaussianRational::inverse() const {
    Rational n = norm2();
    if (sgn(n) == 0) throw_error(ErrorCode::InvalidArgument, "division by zero");
    return {re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
    if (sgn(o.re_) != 0) re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
    if (sgn(o.re_) != 0) re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
    // Most entries in this code base are purely real or purely imaginary.
    const bool a_re = sgn(a.re_) != 0, a_im = sgn(a.im_) != 0;
    const bool b_re = sgn(b.re_) != 0, b_im = sgn(b.im_) != 0;
    GaussianRational out;
    if (a_re && b_re) out.re_ = a.re_ * b.re_;
    if (a_im && b_im) out.re_ -= a.im_ * b.im_;
    if (a_re && b_im) out.im_ = a.re_ * b.im_;
    if (a_im && b_re) out.im_ += a.im_ * b.re_;
    return out;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) { return *this = *this * o; }

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) { return *this = *this * o.inverse(); }

std::string rational_to_string(const Rational &q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return rational_to_string(re_);
    std::string imag;
    Rational mag = abs(im_);
    imag = mag == 1 ? "i" : rational_to_string(mag) + "*i";
    if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
    return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

namespace {

class ScalarScanner {
   public:
    explicit ScalarScanner(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::optional<Rational> unsigned_rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        std::string num(s_.substr(start, pos_ - start));
        std::string den = "1";
        if (eat('/')) {
            skip_ws();
            std::size_t ds = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (ds == pos_) fail("expected denominator digits");
            den = std::string(s_.substr(ds, pos_ - ds));
        }
        mpz_class n(num), d(den);
        if (d == 0) fail("zero denominator");
        Rational q(n, d);
        q.canonicalize();
        return q;
    }
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, 0, pos_ + 1); }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

// One signed component: "3/4", "-i", "2*i", "+1/2*i". Returns (value, is_imaginary).
std::optional<std::pair<Rational, bool>> signed_part(ScalarScanner &sc, bool require_sign) {
    int sign = 1;
    if (sc.eat('-')) {
        sign = -1;
    } else if (!sc.eat('+') && require_sign) {
        return std::nullopt;
    }
    auto mag = sc.unsigned_rational();
    bool imaginary = false;
    if (mag) {
        if (sc.eat('*')) {
            if (!sc.eat('i')) sc.fail("expected 'i' after '*'");
            imaginary = true;
        }
    } else if (sc.eat('i')) {
        mag = Rational(1);
        imaginary = true;
    } else {
        sc.fail("expected a rational number or 'i'");
    }
    return std::make_pair(Rational(sign * *mag), imaginary);
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    ScalarScanner sc(text);
    if (sc.at_end()) sc.fail("empty number");
    auto first = signed_part(sc, false);
    GaussianRational out;
    (first->second ? out.im_ : out.re_) = first->first;
    if (!first->second && !sc.at_end()) {
        auto second = signed_part(sc, true);
        if (!second || !second->second) sc.fail("expected an imaginary part");
        out.im_ = second->first;
    }
    if (!sc.at_end()) sc.fail("unexpected trailing characters");
    return out;
}

}  // namespace qsym
