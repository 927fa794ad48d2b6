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

#include "qsym/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>

#include "qsym/errors.hpp"

namespace qsym {

char pauli_letter(PauliOp op) {
    switch (op) {
        case PauliOp::X:
            return 'X';
        case PauliOp::Y:
            return 'Y';
        case PauliOp::Z:
            return 'Z';
    }
    return '?';
}

namespace {

bool signature_less(const std::map<std::size_t, PauliOp> &a, const std::map<std::size_t, PauliOp> &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

PauliPolynomial::PauliPolynomial(std::size_t nqubits, std::vector<PauliTerm> terms) : nqubits_(nqubits) {
    for (const auto &t : terms) {
        for (const auto &[q, op] : t.factors) {
            if (q == 0 || q > nqubits) {
                throw_error(ErrorCode::IndexOutOfRange,
                            "qubit index " + std::to_string(q) + " outside 1.." + std::to_string(nqubits));
            }
        }
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const PauliTerm &a, const PauliTerm &b) { return signature_less(a.factors, b.factors); });
    for (auto &t : terms) {
        if (!terms_.empty() && terms_.back().factors == t.factors) {
            terms_.back().coeff += t.coeff;
        } else {
            terms_.push_back(std::move(t));
        }
    }
    std::erase_if(terms_, [](const PauliTerm &t) { return sgn(t.coeff) == 0; });
}

PauliPolynomial PauliPolynomial::single(std::size_t nqubits, const Rational &coeff,
                                        std::map<std::size_t, PauliOp> factors) {
    return PauliPolynomial(nqubits, {PauliTerm{coeff, std::move(factors)}});
}

PauliPolynomial PauliPolynomial::operator+(const PauliPolynomial &o) const {
    if (o.nqubits_ != nqubits_) throw_error(ErrorCode::DimensionMismatch, "adding polynomials on different registers");
    std::vector<PauliTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return PauliPolynomial(nqubits_, std::move(all));
}

PauliPolynomial PauliPolynomial::scaled(const Rational &s) const {
    std::vector<PauliTerm> all = terms_;
    for (auto &t : all) t.coeff *= s;
    return PauliPolynomial(nqubits_, std::move(all));
}

std::string PauliPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto &t = terms_[k];
        const bool negative = sgn(t.coeff) < 0;
        if (k == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational mag = abs(t.coeff);
        std::string product;
        for (const auto &[q, op] : t.factors) {
            if (!product.empty()) product += "*";
            product += pauli_letter(op) + std::to_string(q);
        }
        if (product.empty()) {
            out += rational_to_string(mag);
        } else if (mag == 1) {
            out += product;
        } else {
            out += rational_to_string(mag) + "*" + product;
        }
    }
    return out;
}

namespace {

class PauliParser {
   public:
    PauliParser(std::string_view text, std::size_t nqubits, std::size_t line, std::size_t offset)
        : s_(text), nqubits_(nqubits), line_(line), offset_(offset) {}

    PauliPolynomial parse() {
        std::vector<PauliTerm> terms;
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a term (coefficient or X/Y/Z factor)");
        terms.push_back(term(+1));
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            int sign;
            if (s_[pos_] == '+') {
                sign = +1;
            } else if (s_[pos_] == '-') {
                sign = -1;
            } else {
                fail("expected '+', '-', '*' or end of expression");
            }
            ++pos_;
            terms.push_back(term(sign));
        }
        return PauliPolynomial(nqubits_, std::move(terms));
    }

   private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string &what, std::optional<std::size_t> at = std::nullopt) const {
        throw ParseError(what, line_, offset_ + at.value_or(pos_) + 1);
    }

    bool peek_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
    bool peek_pauli() const { return pos_ < s_.size() && (s_[pos_] == 'X' || s_[pos_] == 'Y' || s_[pos_] == 'Z'); }

    std::string digits() {
        std::size_t start = pos_;
        while (peek_digit()) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Rational coefficient() {
        std::size_t start = pos_;
        mpz_class num(digits());
        mpz_class den(1);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (!peek_digit()) fail("expected denominator digits after '/'");
            den = mpz_class(digits());
            if (den == 0) fail("zero denominator", start);
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    void factor(PauliTerm &t) {
        skip_ws();
        if (!peek_pauli()) fail("expected Pauli factor X, Y or Z");
        std::size_t start = pos_;
        char letter = s_[pos_++];
        if (!peek_digit()) fail(std::string("expected qubit index after '") + letter + "'");
        std::size_t q = std::stoull(digits());
        if (q == 0 || q > nqubits_) {
            throw Error(ErrorCode::IndexOutOfRange,
                        (line_ ? "line " + std::to_string(line_) + ", " : std::string()) + "column " +
                            std::to_string(offset_ + start + 1) + ": qubit index " + std::to_string(q) +
                            " outside 1.." + std::to_string(nqubits_));
        }
        PauliOp op = letter == 'X' ? PauliOp::X : letter == 'Y' ? PauliOp::Y : PauliOp::Z;
        if (!t.factors.emplace(q, op).second) fail("qubit " + std::to_string(q) + " appears twice in one term", start);
    }

    PauliTerm term(int sign) {
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            if (s_[pos_] == '-') sign = -sign;
            ++pos_;
            skip_ws();
        }
        PauliTerm t;
        t.coeff = sign;
        if (peek_digit()) {
            t.coeff *= coefficient();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                factor(t);
            } else {
                return t;
            }
        } else if (peek_pauli()) {
            factor(t);
        } else {
            fail("expected a term (coefficient or X/Y/Z factor)");
        }
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                factor(t);
            } else {
                return t;
            }
        }
    }

    std::string_view s_;
    std::size_t nqubits_;
    std::size_t line_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

PauliPolynomial parse_pauli(std::string_view text, std::size_t nqubits, std::size_t line, std::size_t column_offset) {
    return PauliParser(text, nqubits, line, column_offset).parse();
}

SparseMatrix realize(const PauliPolynomial &p) {
    const std::size_t n = p.nqubits();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Triplet> t;
    for (const auto &term : p.terms()) {
        std::size_t xmask = 0, signmask = 0, ycount = 0;
        for (const auto &[q, op] : term.factors) {
            std::size_t bit = std::size_t{1} << (n - q);
            if (op != PauliOp::Z) xmask |= bit;
            if (op != PauliOp::X) signmask |= bit;
            if (op == PauliOp::Y) ++ycount;
        }
        // P|c> = i^{#Y} (-1)^{popcount(c & signmask)} |c ^ xmask>
        GaussianRational base = ycount % 2 == 0 ? GaussianRational(term.coeff)
                                                : GaussianRational(Rational(0), term.coeff);
        if (ycount % 4 >= 2) base = -base;
        for (std::size_t c = 0; c < dim; ++c) {
            bool odd = std::popcount(c & signmask) % 2 == 1;
            t.push_back({c ^ xmask, c, odd ? -base : base});
        }
    }
    return SparseMatrix::from_triplets(dim, dim, t);
}

SparseMatrix skewify(const PauliPolynomial &p) { return GaussianRational::i() * realize(p); }

}  // namespace qsym
