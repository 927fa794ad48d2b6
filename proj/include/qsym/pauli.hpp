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

#ifndef QSYM_PAULI_HPP
#define QSYM_PAULI_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/gaussian_rational.hpp"
#include "qsym/sparse_matrix.hpp"

namespace qsym {

enum class PauliOp : unsigned char { X, Y, Z };

char pauli_letter(PauliOp op);

/// coeff * (product of single-qubit Paulis). Qubits are 1-based; an empty
/// factor map is coeff times the identity.
struct PauliTerm {
    Rational coeff;
    std::map<std::size_t, PauliOp> factors;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// Real-coefficient sum of Pauli strings on a fixed number of qubits.
///
/// Always canonical: terms are ordered by signature (weight first, then the
/// qubit/letter sequence), signatures are unique and no coefficient is zero.
class PauliPolynomial {
   public:
    explicit PauliPolynomial(std::size_t nqubits = 0) : nqubits_(nqubits) {}
    /// Collects like terms. Throws IndexOutOfRange for qubit 0 or > nqubits.
    PauliPolynomial(std::size_t nqubits, std::vector<PauliTerm> terms);

    static PauliPolynomial single(std::size_t nqubits, const Rational &coeff,
                                  std::map<std::size_t, PauliOp> factors);

    std::size_t nqubits() const noexcept { return nqubits_; }
    const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    PauliPolynomial operator+(const PauliPolynomial &o) const;
    PauliPolynomial scaled(const Rational &s) const;

    friend bool operator==(const PauliPolynomial &, const PauliPolynomial &) = default;

    /// Expression in the input grammar, e.g. "X1 + 2*Z1*Z2 - 1/3*Y2".
    std::string to_string() const;

   private:
    std::size_t nqubits_;
    std::vector<PauliTerm> terms_;
};

/// Parses the expression grammar
///   expr   := term (("+" | "-") term)*
///   term   := [coeff "*"] factor ("*" factor)* | coeff
///   factor := ("X" | "Y" | "Z") integer
///   coeff  := rational such as 2, -1/3
/// A sign directly in front of a factor ("-X1") is read as coefficient -1.
/// Columns in errors are reported relative to `column_offset`.
PauliPolynomial parse_pauli(std::string_view text, std::size_t nqubits, std::size_t line = 0,
                            std::size_t column_offset = 0);

/// 2^n x 2^n matrix; qubit 1 is the leftmost tensor factor.
SparseMatrix realize(const PauliPolynomial &p);
/// i * realize(p), the skew-Hermitian generator.
SparseMatrix skewify(const PauliPolynomial &p);

}  // namespace qsym

#endif  // QSYM_PAULI_HPP
