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

#ifndef QSYM_INSTANCE_FILE_HPP
#define QSYM_INSTANCE_FILE_HPP

// Line-oriented instance files:
//
//   # comment
//   system: qubits 2
//   P: dipole = 2*Z1*Z2 - X1*X2 - Y1*Y2; X1 - Y1 + X2 - Y2
//   Q: X1*X2 + Y1*Y2 + Z1*Z2
//
// or, in raw-matrix mode, `system: dim 2` with items such as
// `h = [[0, 1-i], [1+i, 0]]`. Items are Hermitian Hamiltonians H; the
// generator used downstream is iH. P and Q lines may repeat and append.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/instance.hpp"
#include "qsym/pauli.hpp"
#include "qsym/sparse_matrix.hpp"

namespace qsym {

enum class InstanceMode { Qubits, Matrix };

struct InstanceItem {
    std::string label;
    /// Exactly one of the two is set, according to the file mode.
    std::optional<PauliPolynomial> pauli;
    std::optional<SparseMatrix> matrix;

    friend bool operator==(const InstanceItem &, const InstanceItem &) = default;
};

struct InstanceFile {
    InstanceMode mode = InstanceMode::Qubits;
    /// Qubit count or matrix dimension.
    std::size_t size = 0;
    std::vector<InstanceItem> p;
    std::vector<InstanceItem> q;

    /// Hilbert-space dimension d.
    std::size_t dim() const;
    /// Validated instance with generators iH.
    ProblemInstance to_problem() const;
    /// Canonical text; parse_instance_file(to_text()) == *this.
    std::string to_text() const;

    friend bool operator==(const InstanceFile &, const InstanceFile &) = default;
};

/// Throws ParseError with line and column, or IndexOutOfRange for qubit
/// indices outside the register.
InstanceFile parse_instance_file(std::string_view text);
/// Throws Io if the file cannot be read.
InstanceFile load_instance_file(const std::string &path);
InstanceFile instance_file_from_model(const PauliModel &model);

/// Exact matrix literal "[[a, b], [c, d]]" with entries like 1/2-3*i.
std::string matrix_literal(const SparseMatrix &m);

}  // namespace qsym

#endif  // QSYM_INSTANCE_FILE_HPP
