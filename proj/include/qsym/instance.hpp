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

#ifndef QSYM_INSTANCE_HPP
#define QSYM_INSTANCE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qsym/pauli.hpp"
#include "qsym/sparse_matrix.hpp"

namespace qsym {

/// Given generators P and targets Q, all d x d and skew-Hermitian (iH).
struct ProblemInstance {
    std::size_t dim = 0;
    std::vector<SparseMatrix> p_set;
    std::vector<SparseMatrix> q_set;
    std::vector<std::string> p_labels;
    std::vector<std::string> q_labels;

    /// Throws DimensionMismatch, NotSkewHermitian or InvalidArgument (empty P).
    void validate() const;
    std::vector<SparseMatrix> union_set() const;
};

struct LabeledPolynomial {
    std::string label;
    PauliPolynomial hamiltonian;

    friend bool operator==(const LabeledPolynomial &, const LabeledPolynomial &) = default;
};

/// Qubit-register form of an instance, as written by users: Hermitian
/// Pauli polynomials that become iH on realization.
struct PauliModel {
    std::size_t nqubits = 0;
    std::vector<LabeledPolynomial> p;
    std::vector<LabeledPolynomial> q;

    ProblemInstance instance() const;

    friend bool operator==(const PauliModel &, const PauliModel &) = default;
};

/// Couplings J_2..J_n for the two standard cases: 'a' sets every J_k = 1,
/// 'b' sets J_k = 2 for even k and 1 otherwise.
std::vector<Rational> central_spin_couplings(std::size_t n, char which_case);

/// Star graph around qubit 1: P = {H1, Z1} with
/// H1 = X1 + sum_k J_k (X1 Xk + Y1 Yk + Z1 Zk), and Q = {X1}.
PauliModel central_spin_model(std::size_t n, const std::vector<Rational> &couplings);
ProblemInstance central_spin_instance(std::size_t n, const std::vector<Rational> &couplings);

/// "ex1": local controls vs. the ZZ coupling on two qubits.
/// "ex2a"/"ex2b": dipole coupling plus tilted field against a Heisenberg
/// target (a) or a pairing-type target (b).
PauliModel example_model(const std::string &name);
ProblemInstance example_fixture(const std::string &name);

}  // namespace qsym

#endif  // QSYM_INSTANCE_HPP
