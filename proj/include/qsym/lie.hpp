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

#ifndef QSYM_LIE_HPP
#define QSYM_LIE_HPP

// Brute-force Lie closure of skew-Hermitian generators, exact over Q.
// Slow on purpose: it is the reference the symmetry engine is checked
// against.

#include <cstddef>
#include <optional>
#include <vector>

#include "qsym/instance.hpp"
#include "qsym/sparse_matrix.hpp"
#include "qsym/symmetry.hpp"

namespace qsym {

struct LieBasis {
    std::size_t dim = 0;
    std::vector<SparseMatrix> basis;
    /// Number of bracket levels that still produced new elements.
    std::size_t generation_depth = 0;
    /// The first seed_count basis elements generate the whole algebra.
    /// Hand-built bases should leave this equal to dim.
    std::size_t seed_count = 0;
};

/// Real coordinates of a skew-Hermitian d x d matrix: Im m(i,i) for the
/// diagonal, then Re and Im of m(i,j) for i < j. Exactly d^2 numbers.
std::vector<std::pair<std::size_t, Rational>> skew_coordinates(const SparseMatrix &m);

/// Incremental reduced row echelon form over Q; rows are kept fully
/// reduced, so membership is a single pass over the pivots.
class RationalEchelon {
   public:
    explicit RationalEchelon(std::size_t ncoords) : ncoords_(ncoords), pivot_row_(ncoords, -1) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    /// Inserts v if it is independent of the current rows.
    bool insert(const std::vector<std::pair<std::size_t, Rational>> &v);
    bool contains(const std::vector<std::pair<std::size_t, Rational>> &v) const;

   private:
    std::vector<Rational> reduce(const std::vector<std::pair<std::size_t, Rational>> &v) const;

    std::size_t ncoords_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
    std::vector<long> pivot_row_;
};

/// Breadth-first closure: every new element is bracketed with the
/// independent generators, and independent results join the basis, until a
/// whole level adds nothing. Left-normed brackets of generators span the
/// generated algebra, so this is the full closure.
/// Throws NotSkewHermitian, DimensionMismatch, or BudgetExceeded when the
/// dimension would pass max_dim (default d^2).
LieBasis lie_closure(const std::vector<SparseMatrix> &generators, std::size_t dim,
                     std::optional<std::size_t> max_dim = std::nullopt);

struct AlgebraDecomposition {
    std::size_t semisimple_dim = 0;
    std::size_t center_dim = 0;
    std::vector<SparseMatrix> center_basis;
    std::vector<SparseMatrix> derived_basis;
};

/// g = [g, g] + center. Throws NotClosed if some bracket of basis elements
/// leaves the span.
AlgebraDecomposition decompose(const LieBasis &basis);

struct OracleResult {
    Verdict verdict = Verdict::NotSimulable;
    std::size_t closure_dim_p = 0;
    std::size_t closure_dim_pq = 0;
};

/// Simulable iff dim <P> = dim <P u Q>.
OracleResult oracle_verdict(const ProblemInstance &instance, std::optional<std::size_t> max_dim = std::nullopt);

}  // namespace qsym

#endif  // QSYM_LIE_HPP
