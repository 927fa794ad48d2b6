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

#include "qsym/lie.hpp"

#include <algorithm>

#include "qsym/errors.hpp"
#include "qsym/linalg.hpp"

namespace qsym {

std::vector<std::pair<std::size_t, Rational>> skew_coordinates(const SparseMatrix &m) {
    if (!m.is_square()) throw_error(ErrorCode::DimensionMismatch, "skew coordinates need a square matrix");
    const std::size_t d = m.nrows();
    std::vector<std::pair<std::size_t, Rational>> out;
    // index: diagonal i -> i; (i<j) -> d + 2*k (+1 for Im), k the rank of (i,j)
    // among upper-triangular pairs in row-major order.
    auto pair_index = [d](std::size_t i, std::size_t j) { return i * d - i * (i + 1) / 2 + (j - i - 1); };
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto &e : m.row(i)) {
            if (e.col == i) {
                if (sgn(e.value.im()) != 0) out.emplace_back(i, e.value.im());
            } else if (e.col > i) {
                std::size_t k = d + 2 * pair_index(i, e.col);
                if (sgn(e.value.re()) != 0) out.emplace_back(k, e.value.re());
                if (sgn(e.value.im()) != 0) out.emplace_back(k + 1, e.value.im());
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

std::vector<Rational> RationalEchelon::reduce(const std::vector<std::pair<std::size_t, Rational>> &v) const {
    std::vector<Rational> dense(ncoords_);
    for (const auto &[k, x] : v) {
        if (k >= ncoords_) throw_error(ErrorCode::IndexOutOfRange, "coordinate outside echelon width");
        dense[k] = x;
    }
    // Rows are fully reduced, so each pivot is eliminated exactly once.
    for (const auto &[k, x] : v) {
        long r = pivot_row_[k];
        if (r < 0 || sgn(dense[k]) == 0) continue;
        Rational f = dense[k];
        for (const auto &[c, y] : rows_[static_cast<std::size_t>(r)]) dense[c] -= f * y;
    }
    return dense;
}

bool RationalEchelon::contains(const std::vector<std::pair<std::size_t, Rational>> &v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational &x) { return sgn(x) == 0; });
}

bool RationalEchelon::insert(const std::vector<std::pair<std::size_t, Rational>> &v) {
    auto dense = reduce(v);
    std::size_t pivot = ncoords_;
    for (std::size_t k = 0; k < ncoords_; ++k) {
        if (sgn(dense[k]) != 0) {
            pivot = k;
            break;
        }
    }
    if (pivot == ncoords_) return false;
    Rational inv = 1 / dense[pivot];
    std::vector<std::pair<std::size_t, Rational>> row;
    for (std::size_t k = pivot; k < ncoords_; ++k) {
        if (sgn(dense[k]) != 0) row.emplace_back(k, dense[k] * inv);
    }
    // Clear the new pivot column from the existing rows.
    for (auto &other : rows_) {
        auto it = std::lower_bound(other.begin(), other.end(), pivot,
                                   [](const auto &e, std::size_t c) { return e.first < c; });
        if (it == other.end() || it->first != pivot) continue;
        Rational f = it->second;
        std::vector<std::pair<std::size_t, Rational>> merged;
        merged.reserve(other.size() + row.size());
        std::size_t i = 0, j = 0;
        while (i < other.size() || j < row.size()) {
            if (j == row.size() || (i < other.size() && other[i].first < row[j].first)) {
                merged.push_back(std::move(other[i++]));
            } else if (i == other.size() || row[j].first < other[i].first) {
                merged.emplace_back(row[j].first, -f * row[j].second);
                ++j;
            } else {
                Rational x = other[i].second - f * row[j].second;
                if (sgn(x) != 0) merged.emplace_back(other[i].first, std::move(x));
                ++i;
                ++j;
            }
        }
        other = std::move(merged);
    }
    pivot_row_[pivot] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

namespace {

void check_skew(const std::vector<SparseMatrix> &gens, std::size_t dim) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].nrows() != dim || gens[k].ncols() != dim) {
            throw_error(ErrorCode::DimensionMismatch, "generator " + std::to_string(k + 1) + " is not " +
                                                          std::to_string(dim) + "x" + std::to_string(dim));
        }
        if (!gens[k].is_skew_hermitian()) {
            throw_error(ErrorCode::NotSkewHermitian, "generator " + std::to_string(k + 1) + " is not skew-Hermitian");
        }
    }
}

}  // namespace

LieBasis lie_closure(const std::vector<SparseMatrix> &generators, std::size_t dim,
                     std::optional<std::size_t> max_dim) {
    check_skew(generators, dim);
    const std::size_t budget = max_dim.value_or(dim * dim);
    LieBasis out;
    RationalEchelon ech(dim * dim);
    auto try_add = [&](const SparseMatrix &m) {
        if (!ech.insert(skew_coordinates(m))) return false;
        if (out.basis.size() + 1 > budget) {
            throw_error(ErrorCode::BudgetExceeded,
                        "Lie closure exceeds the dimension budget of " + std::to_string(budget));
        }
        out.basis.push_back(primitive_form(m));
        return true;
    };

    std::vector<std::size_t> frontier;
    for (const auto &g : generators) {
        if (try_add(g)) frontier.push_back(out.basis.size() - 1);
    }
    out.seed_count = out.basis.size();
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : frontier) {
            for (std::size_t s = 0; s < out.seed_count; ++s) {
                if (try_add(commutator(out.basis[s], out.basis[x]))) next.push_back(out.basis.size() - 1);
            }
        }
        if (!next.empty()) ++out.generation_depth;
        frontier = std::move(next);
    }
    out.dim = out.basis.size();
    return out;
}

AlgebraDecomposition decompose(const LieBasis &lie) {
    if (lie.basis.empty()) return {};
    const std::size_t d = lie.basis.front().nrows();
    check_skew(lie.basis, d);
    const std::size_t seeds = lie.seed_count == 0 ? lie.basis.size() : std::min(lie.seed_count, lie.basis.size());

    RationalEchelon span(d * d);
    for (const auto &b : lie.basis) {
        if (!span.insert(skew_coordinates(b))) {
            throw_error(ErrorCode::InvalidArgument, "Lie basis elements are linearly dependent");
        }
    }

    // With seeds generating g, [g, g] is spanned by [seed, b] (Jacobi), and
    // x is central iff it commutes with every seed.
    AlgebraDecomposition out;
    RationalEchelon derived(d * d);
    for (std::size_t s = 0; s < seeds; ++s) {
        for (std::size_t j = 0; j < lie.basis.size(); ++j) {
            auto c = commutator(lie.basis[s], lie.basis[j]);
            auto coords = skew_coordinates(c);
            if (!span.contains(coords)) {
                throw_error(ErrorCode::NotClosed, "bracket of basis elements " + std::to_string(s + 1) + " and " +
                                                      std::to_string(j + 1) + " leaves the span");
            }
            if (derived.insert(coords)) out.derived_basis.push_back(primitive_form(c));
        }
    }

    // Real unknowns c_k with sum_k c_k [b_k, seed] = 0 for every seed.
    std::vector<Triplet> t;
    std::size_t row = 0;
    for (std::size_t s = 0; s < seeds; ++s) {
        std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
        for (const auto &b : lie.basis) cols.push_back(skew_coordinates(commutator(b, lie.basis[s])));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            for (const auto &[c, x] : cols[k]) t.push_back({row + c, k, GaussianRational(x)});
        }
        row += d * d;
    }
    auto kernel = nullspace_basis(SparseMatrix::from_triplets(row, lie.basis.size(), t));
    for (const auto &v : kernel) {
        SparseMatrix x(d, d);
        for (std::size_t k = 0; k < v.nrows(); ++k) {
            const auto &r = v.row(k);
            if (!r.empty()) x += r.front().value * lie.basis[k];
        }
        out.center_basis.push_back(primitive_form(x));
    }
    out.semisimple_dim = out.derived_basis.size();
    out.center_dim = out.center_basis.size();
    if (out.semisimple_dim + out.center_dim != lie.basis.size()) {
        throw_error(ErrorCode::NotClosed, "derived algebra and center do not add up to the algebra");
    }
    return out;
}

OracleResult oracle_verdict(const ProblemInstance &instance, std::optional<std::size_t> max_dim) {
    instance.validate();
    OracleResult out;
    out.closure_dim_p = lie_closure(instance.p_set, instance.dim, max_dim).dim;
    out.closure_dim_pq = lie_closure(instance.union_set(), instance.dim, max_dim).dim;
    out.verdict = out.closure_dim_p == out.closure_dim_pq ? Verdict::Simulable : Verdict::NotSimulable;
    return out;
}

}  // namespace qsym
