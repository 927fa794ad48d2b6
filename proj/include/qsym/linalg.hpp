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

#ifndef QSYM_LINALG_HPP
#define QSYM_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsym/sparse_matrix.hpp"

namespace qsym {

enum class RankMode { Exact, Modular, Auto };
enum class RankMethod { Exact, Modular };

const char *rank_mode_name(RankMode mode);
const char *rank_method_name(RankMethod method);
RankMode parse_rank_mode(const std::string &name);

struct RankOptions {
    RankMode mode = RankMode::Auto;
    /// Auto switches a block to modular arithmetic once rows*cols exceeds this.
    std::uint64_t modular_threshold = 4'000'000;
    /// Seeds the prime selection; a fixed seed keeps modular runs reproducible.
    std::uint64_t seed = 0x71d3u;
    /// Modular elimination of a block hands over to a black-box (Wiedemann)
    /// rank, whose memory stays linear in the block, once fill-in passes
    /// this many stored entries, or passes 1/16 of it while making the rest
    /// of the problem more expensive. 0 disables the fallback.
    std::uint64_t fill_limit = 64'000'000;
};

struct RankResult {
    std::size_t rank = 0;
    RankMethod method = RankMethod::Exact;
    /// Present iff method == Modular; always > 2^30.
    std::optional<std::uint64_t> prime;

    friend bool operator==(const RankResult &, const RankResult &) = default;
};

/// Independent block of a sparse system: the rows and columns of one
/// connected component of its row/column incidence graph.
struct SparseBlock {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// Blocks ordered by smallest column; columns without entries are omitted.
std::vector<SparseBlock> block_decomposition(const SparseMatrix &a);

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b);
/// Column-major stacking: entry j*nrows + i holds s(i, j).
SparseMatrix vec(const SparseMatrix &s);
SparseMatrix unvec(const SparseMatrix &v, std::size_t nrows, std::size_t ncols);
SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b);

/// Sparse matrix with Gaussian-integer entries in compressed rows. A compact
/// stand-in for SparseMatrix in rank problems with millions of entries.
class GaussianIntMatrix {
   public:
    struct Entry {
        std::uint32_t col;
        std::int64_t re;
        std::int64_t im;
    };

    explicit GaussianIntMatrix(std::size_t ncols = 0) : ncols_(ncols) {}

    std::size_t nrows() const noexcept { return row_ptr_.size() - 1; }
    std::size_t ncols() const noexcept { return ncols_; }
    std::size_t nnz() const noexcept { return entries_.size(); }

    /// Appends a row; entries are sorted, duplicates summed and zeros dropped.
    /// Throws BudgetExceeded if a sum leaves the int64 range.
    void push_row(std::vector<Entry> entries);

    const Entry *row_begin(std::size_t r) const { return entries_.data() + row_ptr_[r]; }
    const Entry *row_end(std::size_t r) const { return entries_.data() + row_ptr_[r + 1]; }

    SparseMatrix to_sparse() const;

   private:
    std::size_t ncols_;
    std::vector<std::uint64_t> row_ptr_{0};
    std::vector<Entry> entries_;
};

std::vector<SparseBlock> block_decomposition(const GaussianIntMatrix &a);

RankResult rank(const SparseMatrix &a, const RankOptions &options = {});
RankResult rank(const GaussianIntMatrix &a, const RankOptions &options = {});
/// Right nullspace over Q(i), in reduced echelon form (the basis vectors,
/// read as rows, form the RREF with leftmost pivots). Always exact.
std::vector<SparseMatrix> nullspace_basis(const SparseMatrix &a);

/// Rescales m so that all entries are Gaussian integers with no common
/// integer factor. The zero matrix is returned unchanged.
SparseMatrix primitive_form(const SparseMatrix &m);

/// Tr(a^dagger b).
GaussianRational hs_inner(const SparseMatrix &a, const SparseMatrix &b);

/// Flattens re/im parts into a rational row vector of length 2*rows*cols.
std::vector<std::pair<std::size_t, Rational>> real_coordinates(const SparseMatrix &m);
/// Dimension over R of the real-linear span.
std::size_t real_span_rank(const std::vector<SparseMatrix> &mats);

/// Stacks the flattened (vec) matrices as rows and returns the canonical
/// RREF basis of their complex span, unflattened again.
std::vector<SparseMatrix> canonical_span_basis(const std::vector<SparseMatrix> &mats);
/// Exact membership of m in the complex span of mats.
bool in_complex_span(const SparseMatrix &m, const std::vector<SparseMatrix> &mats);

}  // namespace qsym

#endif  // QSYM_LINALG_HPP
