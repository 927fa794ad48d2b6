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

#ifndef QSYM_SYMMETRY_HPP
#define QSYM_SYMMETRY_HPP

// Linear symmetries (commutants), quadratic symmetries (commutants of the
// tensor-square lifts), the center of the commutant and the simulability
// decision built from them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsym/instance.hpp"
#include "qsym/linalg.hpp"
#include "qsym/sparse_matrix.hpp"

namespace qsym {

enum class SymmetryKind { Linear, Quadratic };

struct SymmetryBasis {
    std::size_t dim = 0;
    std::vector<SparseMatrix> basis;
    SymmetryKind kind = SymmetryKind::Linear;
};

/// Dimension of a commutant together with how the rank behind it was found.
struct SymmetryDimension {
    std::size_t dim = 0;
    /// Unknowns left after the block-diagonal reduction.
    std::size_t unknowns = 0;
    RankResult rank;

    friend bool operator==(const SymmetryDimension &, const SymmetryDimension &) = default;
};

/// The homogeneous system [S, M] = 0 for all generators M, restricted to the
/// entries of S that can be nonzero.
///
/// Any diagonal element of the associative algebra generated by the input
/// forces S to be block diagonal over its eigenspaces, and every generator
/// may be replaced by its blocks E_a M E_b between those eigenspaces without
/// changing the commutant. The reduction applies both rules until nothing
/// changes, then only keeps unknowns inside the diagonal blocks. Pieces are
/// rescaled to Gaussian-integer form, which does not change the commutant.
struct CommutantSystem {
    std::size_t n = 0;
    /// vec index (col * n + row) of every unknown, strictly increasing.
    std::vector<std::size_t> unknown_vec_index;
    GaussianIntMatrix constraints;
};

CommutantSystem build_commutant_system(const std::vector<SparseMatrix> &generators, std::size_t n);

/// 1_d (x) M - M^t (x) 1_d, so that its kernel is vec of the commutant of M.
SparseMatrix commutator_constraint(const SparseMatrix &m);
/// M (x) 1_d + 1_d (x) M.
SparseMatrix tensor_square_lift(const SparseMatrix &m);
/// The d^4 x d^4 operator 1_{d^2} (x) L - L^t (x) 1_{d^2} for L the lift of
/// M; its kernel is vec of the quadratic symmetries of M.
SparseMatrix constraint_operator(const SparseMatrix &m);
/// K_{d,d}: the swap of the two tensor factors of C^d (x) C^d.
SparseMatrix swap_matrix(std::size_t d);
/// Columns e_aa, e_ab + e_ba (a < b), then e_ab - e_ba (a < b): a basis of
/// C^d (x) C^d adapted to the symmetric/antisymmetric split. Returns the
/// matrix and its inverse.
std::pair<SparseMatrix, SparseMatrix> symmetric_split_basis(std::size_t d);

SymmetryBasis commutant(const std::vector<SparseMatrix> &generators, std::size_t dim);
SymmetryDimension commutant_dimension(const std::vector<SparseMatrix> &generators, std::size_t dim,
                                      const RankOptions &options = {});

SymmetryBasis quadratic_commutant(const std::vector<SparseMatrix> &generators, std::size_t dim);
SymmetryDimension quadratic_commutant_dimension(const std::vector<SparseMatrix> &generators, std::size_t dim,
                                                const RankOptions &options = {});

/// Canonical basis of the center of the commutant of the generators.
std::vector<SparseMatrix> center_of_commutant(const std::vector<SparseMatrix> &generators, std::size_t dim);

struct CentralProjectionData {
    std::vector<SparseMatrix> center_basis;
    /// dim(C) x (p + q), entries Tr(C_a^dagger iH_b).
    SparseMatrix t_full;
    /// The first p columns of t_full.
    SparseMatrix t_restricted;
    RankResult rank_full;
    RankResult rank_restricted;
};

CentralProjectionData central_projections(const std::vector<SparseMatrix> &center_basis,
                                          const std::vector<SparseMatrix> &p_set,
                                          const std::vector<SparseMatrix> &q_set, const RankOptions &options = {});

enum class Verdict { Simulable, NotSimulable };
enum class ConditionStatus { Holds, Fails, Skipped };

const char *verdict_name(Verdict v);
const char *condition_name(ConditionStatus s);

struct DecideOptions {
    RankOptions rank;
    /// Evaluate the central-projection condition even when the quadratic
    /// symmetry condition already failed.
    bool force_condition_b = false;
};

struct SimulabilityReport {
    Verdict verdict = Verdict::NotSimulable;
    ConditionStatus condition_a = ConditionStatus::Fails;
    SymmetryDimension quadratic_p;
    SymmetryDimension quadratic_pq;
    ConditionStatus condition_b = ConditionStatus::Skipped;
    std::optional<CentralProjectionData> projections;
    SymmetryDimension linear_p;
    SymmetryDimension linear_pq;
    std::string failure_witness;
    /// True when some number in the report came from modular arithmetic.
    bool monte_carlo = false;
    /// Wall-clock seconds per phase.
    std::map<std::string, double> timings;
};

/// P simulates Q (the Lie closures of P and P u Q agree) iff the quadratic
/// symmetry dimensions of P and P u Q agree and the central projections
/// T~ (over P) and T (over P u Q) have equal rank.
SimulabilityReport decide(const ProblemInstance &instance, const DecideOptions &options = {});
/// Same as decide without instance validation; P may be empty.
SimulabilityReport decide_sets(std::size_t dim, const std::vector<SparseMatrix> &p_set,
                               const std::vector<SparseMatrix> &q_set, const DecideOptions &options = {});

enum class MutualRelation { Equal, PStrictlyLarger, QStrictlyLarger, Incomparable };
const char *mutual_relation_name(MutualRelation r);

struct MutualReport {
    MutualRelation relation = MutualRelation::Incomparable;
    SimulabilityReport p_simulates_q;
    SimulabilityReport q_simulates_p;
};

MutualReport decide_mutual(std::size_t dim, const std::vector<SparseMatrix> &p_set,
                           const std::vector<SparseMatrix> &q_set, const DecideOptions &options = {});

/// Tr[(rho (x) rho) s]. Throws NotUnitTrace unless Tr rho = 1.
GaussianRational quadratic_invariant(const SparseMatrix &rho, const SparseMatrix &s);

/// Squared concurrence of a normalized two-qubit pure state,
/// <psi psi| 1 - M_(1,3) - M_(2,4) + M_(1,3)(2,4) |psi psi>, where M_p
/// permutes the four qubits of the doubled register. A Bell state gives 1.
/// The concurrence itself is the square root. Throws NotNormalized.
GaussianRational concurrence_squared(const SparseMatrix &psi);
/// Same quantity for the ray through a nonzero, possibly unnormalized psi.
GaussianRational concurrence_squared_of_ray(const SparseMatrix &psi);
/// Permutation matrix on n qubits sending qubit k to position perm[k-1].
SparseMatrix qubit_permutation(std::size_t nqubits, const std::vector<std::size_t> &perm);

}  // namespace qsym

#endif  // QSYM_SYMMETRY_HPP
