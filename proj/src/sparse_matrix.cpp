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

#include "qsym/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

void check_same_shape(const SparseMatrix &a, const SparseMatrix &b, const char *op) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
        throw_error(ErrorCode::DimensionMismatch, std::string(op) + ": shapes " + std::to_string(a.nrows()) + "x" +
                                                      std::to_string(a.ncols()) + " and " +
                                                      std::to_string(b.nrows()) + "x" + std::to_string(b.ncols()));
    }
}

// Merge b into a with a += sign*b; both sorted by column.
std::vector<SparseEntry> merge_rows(const std::vector<SparseEntry> &a, const std::vector<SparseEntry> &b, bool negate) {
    std::vector<SparseEntry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, negate ? -b[j].value : b[j].value});
            ++j;
        } else {
            GaussianRational v = negate ? a[i].value - b[j].value : a[i].value + b[j].value;
            if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t nrows, std::size_t ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, GaussianRational(1)});
    return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t nrows, std::size_t ncols, const std::vector<Triplet> &triplets) {
    SparseMatrix m(nrows, ncols);
    std::vector<const Triplet *> order;
    order.reserve(triplets.size());
    for (const auto &t : triplets) {
        if (t.row >= nrows || t.col >= ncols) {
            throw_error(ErrorCode::IndexOutOfRange, "triplet (" + std::to_string(t.row) + "," +
                                                        std::to_string(t.col) + ") outside " +
                                                        std::to_string(nrows) + "x" + std::to_string(ncols));
        }
        order.push_back(&t);
    }
    std::stable_sort(order.begin(), order.end(), [](const Triplet *a, const Triplet *b) {
        return a->row != b->row ? a->row < b->row : a->col < b->col;
    });
    for (std::size_t k = 0; k < order.size();) {
        std::size_t r = order[k]->row, c = order[k]->col;
        GaussianRational sum;
        while (k < order.size() && order[k]->row == r && order[k]->col == c) sum += order[k++]->value;
        if (!sum.is_zero()) m.rows_[r].push_back({c, std::move(sum)});
    }
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<GaussianRational>> &rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw_error(ErrorCode::DimensionMismatch, "ragged dense matrix");
        for (std::size_t j = 0; j < nc; ++j) {
            if (!rows[i][j].is_zero()) m.rows_[i].push_back({j, rows[i][j]});
        }
    }
    return m;
}

SparseMatrix SparseMatrix::column(const std::vector<GaussianRational> &values) {
    SparseMatrix m(values.size(), 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].is_zero()) m.rows_[i].push_back({0, values[i]});
    }
    return m;
}

std::size_t SparseMatrix::nnz() const noexcept {
    std::size_t n = 0;
    for (const auto &r : rows_) n += r.size();
    return n;
}

bool SparseMatrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto &e : rows_[i]) {
            if (e.col != i) return false;
        }
    }
    return true;
}

GaussianRational SparseMatrix::at(std::size_t i, std::size_t j) const {
    const auto &r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const SparseEntry &e, std::size_t c) { return e.col < c; });
    return it != r.end() && it->col == j ? it->value : GaussianRational();
}

void SparseMatrix::set(std::size_t i, std::size_t j, const GaussianRational &value) {
    if (i >= nrows_ || j >= ncols_) throw_error(ErrorCode::IndexOutOfRange, "set outside matrix");
    auto &r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const SparseEntry &e, std::size_t c) { return e.col < c; });
    bool present = it != r.end() && it->col == j;
    if (value.is_zero()) {
        if (present) r.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        r.insert(it, {j, value});
    }
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto &e : rows_[i]) out.push_back({i, e.col, e.value});
    }
    return out;
}

std::vector<std::vector<GaussianRational>> SparseMatrix::to_dense() const {
    std::vector<std::vector<GaussianRational>> out(nrows_, std::vector<GaussianRational>(ncols_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto &e : rows_[i]) out[i][e.col] = e.value;
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(ncols_, nrows_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto &e : rows_[i]) t.rows_[e.col].push_back({i, e.value});
    }
    return t;
}

SparseMatrix SparseMatrix::conj() const {
    SparseMatrix c = *this;
    for (auto &r : c.rows_) {
        for (auto &e : r) e.value = e.value.conj();
    }
    return c;
}

SparseMatrix SparseMatrix::adjoint() const { return transpose().conj(); }

GaussianRational SparseMatrix::trace() const {
    GaussianRational t;
    for (std::size_t i = 0; i < std::min(nrows_, ncols_); ++i) t += at(i, i);
    return t;
}

bool SparseMatrix::is_hermitian() const { return is_square() && adjoint() == *this; }

bool SparseMatrix::is_skew_hermitian() const { return is_square() && adjoint() == -*this; }

SparseMatrix &SparseMatrix::operator+=(const SparseMatrix &o) {
    check_same_shape(*this, o, "add");
    for (std::size_t i = 0; i < nrows_; ++i) {
        if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], false);
    }
    return *this;
}

SparseMatrix &SparseMatrix::operator-=(const SparseMatrix &o) {
    check_same_shape(*this, o, "subtract");
    for (std::size_t i = 0; i < nrows_; ++i) {
        if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], true);
    }
    return *this;
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.ncols_ != b.nrows_) {
        throw_error(ErrorCode::DimensionMismatch, "multiply: inner dimensions " + std::to_string(a.ncols_) + " and " +
                                                      std::to_string(b.nrows_));
    }
    SparseMatrix out(a.nrows_, b.ncols_);
    std::vector<GaussianRational> acc(b.ncols_);
    std::vector<char> used(b.ncols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.nrows_; ++i) {
        touched.clear();
        for (const auto &ea : a.rows_[i]) {
            for (const auto &eb : b.rows_[ea.col]) {
                if (!used[eb.col]) {
                    used[eb.col] = 1;
                    touched.push_back(eb.col);
                    acc[eb.col] = ea.value * eb.value;
                } else {
                    acc[eb.col] += ea.value * eb.value;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        auto &row = out.rows_[i];
        for (std::size_t c : touched) {
            used[c] = 0;
            if (!acc[c].is_zero()) row.push_back({c, std::move(acc[c])});
            acc[c] = GaussianRational();
        }
    }
    return out;
}

SparseMatrix operator*(const GaussianRational &s, const SparseMatrix &m) {
    if (s.is_zero()) return SparseMatrix(m.nrows_, m.ncols_);
    SparseMatrix out = m;
    for (auto &r : out.rows_) {
        for (auto &e : r) e.value = s * e.value;
    }
    return out;
}

SparseMatrix SparseMatrix::operator-() const { return GaussianRational(-1) * *this; }

std::string SparseMatrix::to_string() const {
    std::ostringstream os;
    os << nrows_ << "x" << ncols_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) continue;
        os << "\n ";
        for (const auto &e : rows_[i]) os << " (" << i << "," << e.col << ") " << e.value.to_string();
    }
    return os.str();
}

}  // namespace qsym
