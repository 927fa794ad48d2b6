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

#ifndef QSYM_SPARSE_MATRIX_HPP
#define QSYM_SPARSE_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qsym/gaussian_rational.hpp"

namespace qsym {

struct Triplet {
    std::size_t row;
    std::size_t col;
    GaussianRational value;
};

struct SparseEntry {
    std::size_t col;
    GaussianRational value;

    friend bool operator==(const SparseEntry &, const SparseEntry &) = default;
};

/// Row-compressed exact complex matrix. Stored entries are never zero and
/// each row is sorted by column, so operator== is structural.
class SparseMatrix {
   public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t nrows, std::size_t ncols);

    static SparseMatrix identity(std::size_t n);
    /// Duplicate coordinates are summed; zero sums are dropped.
    static SparseMatrix from_triplets(std::size_t nrows, std::size_t ncols, const std::vector<Triplet> &triplets);
    static SparseMatrix from_dense(const std::vector<std::vector<GaussianRational>> &rows);
    static SparseMatrix column(const std::vector<GaussianRational> &values);

    std::size_t nrows() const noexcept { return nrows_; }
    std::size_t ncols() const noexcept { return ncols_; }
    std::size_t nnz() const noexcept;
    bool is_square() const noexcept { return nrows_ == ncols_; }
    bool is_zero() const noexcept { return nnz() == 0; }
    bool is_diagonal() const noexcept;

    const std::vector<SparseEntry> &row(std::size_t i) const { return rows_[i]; }
    GaussianRational at(std::size_t i, std::size_t j) const;
    /// Overwrites one entry (removing it when value is zero).
    void set(std::size_t i, std::size_t j, const GaussianRational &value);

    std::vector<Triplet> triplets() const;
    std::vector<std::vector<GaussianRational>> to_dense() const;

    SparseMatrix transpose() const;
    SparseMatrix conj() const;
    SparseMatrix adjoint() const;
    GaussianRational trace() const;

    bool is_hermitian() const;
    bool is_skew_hermitian() const;

    SparseMatrix &operator+=(const SparseMatrix &o);
    SparseMatrix &operator-=(const SparseMatrix &o);
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix &b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix &b) { return a -= b; }
    friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
    friend SparseMatrix operator*(const GaussianRational &s, const SparseMatrix &m);
    SparseMatrix operator-() const;

    friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

    /// One row per line, "(r,c) value" entries; used in human reports.
    std::string to_string() const;

   private:
    std::size_t nrows_ = 0;
    std::size_t ncols_ = 0;
    std::vector<std::vector<SparseEntry>> rows_;
};

}  // namespace qsym

#endif  // QSYM_SPARSE_MATRIX_HPP
