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

#ifndef QSYM_TESTS_TEST_SUPPORT_HPP
#define QSYM_TESTS_TEST_SUPPORT_HPP

// Deliberately naive dense reference code for the tests. Nothing here calls
// into the library's linear algebra, so it can serve as an oracle for it.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qsym/gaussian_rational.hpp"
#include "qsym/pauli.hpp"
#include "qsym/sparse_matrix.hpp"

namespace qsym::testing {

using Dense = std::vector<std::vector<GaussianRational>>;

inline Dense dense_zero(std::size_t r, std::size_t c) { return Dense(r, std::vector<GaussianRational>(c)); }

inline Dense dense_identity(std::size_t n) {
    auto d = dense_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

inline Dense dense_mul(const Dense &a, const Dense &b) {
    auto out = dense_zero(a.size(), b.empty() ? 0 : b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

inline Dense dense_sub(Dense a, const Dense &b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= b[i][j];
    }
    return a;
}

inline Dense dense_kron(const Dense &a, const Dense &b) {
    const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    auto out = dense_zero(ar * br, ac * bc);
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

inline Dense dense_transpose(const Dense &a) {
    auto out = dense_zero(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

/// Textbook Gauss-Jordan rank over Q(i), row by row.
inline std::size_t dense_rank(Dense a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            GaussianRational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Column-major flattening of a dense matrix into a row.
inline std::vector<GaussianRational> dense_flatten(const Dense &m) {
    std::vector<GaussianRational> v;
    for (std::size_t j = 0; j < m[0].size(); ++j)
        for (std::size_t i = 0; i < m.size(); ++i) v.push_back(m[i][j]);
    return v;
}

/// dim over C of the span of the given matrices.
inline std::size_t dense_span_dim(const std::vector<Dense> &mats) {
    Dense rows;
    for (const auto &m : mats) rows.push_back(dense_flatten(m));
    return rows.empty() ? 0 : dense_rank(rows);
}

/// Two sets of matrices span the same complex space.
inline bool same_span(const std::vector<SparseMatrix> &a, const std::vector<SparseMatrix> &b) {
    std::vector<Dense> da, db, both;
    for (const auto &m : a) da.push_back(m.to_dense());
    for (const auto &m : b) db.push_back(m.to_dense());
    both = da;
    both.insert(both.end(), db.begin(), db.end());
    auto ra = dense_span_dim(da), rb = dense_span_dim(db);
    return ra == rb && dense_span_dim(both) == ra;
}

inline GaussianRational gr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

/// Single-qubit Paulis written out by hand.
inline Dense pauli_2x2(char op) {
    switch (op) {
        case 'X':
            return {{gr(0), gr(1)}, {gr(1), gr(0)}};
        case 'Y':
            return {{gr(0), gr(0, -1)}, {gr(0, 1), gr(0)}};
        case 'Z':
            return {{gr(1), gr(0)}, {gr(0), gr(-1)}};
        default:
            return dense_identity(2);
    }
}

/// Dense realization of a Pauli string such as "XIZ" (qubit 1 leftmost).
inline Dense dense_pauli_string(const std::string &ops) {
    Dense out = {{gr(1)}};
    for (char c : ops) out = dense_kron(out, pauli_2x2(c));
    return out;
}

inline Rational random_rational(std::mt19937_64 &rng, int lo = -3, int hi = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(lo * max_den, hi * max_den);
    std::uniform_int_distribution<int> den(1, max_den);
    int d = den(rng);
    int n = num(rng);
    // keep the value inside [lo, hi]
    while (n > hi * d || n < lo * d) n = num(rng);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline GaussianRational random_gaussian(std::mt19937_64 &rng, int range = 3) {
    return {random_rational(rng, -range, range), random_rational(rng, -range, range)};
}

inline SparseMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, double density = 0.6,
                                  int range = 3) {
    std::bernoulli_distribution keep(density);
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng)) t.push_back({i, j, random_gaussian(rng, range)});
    return SparseMatrix::from_triplets(r, c, t);
}

/// Random Hermitian Pauli polynomial with coefficients in [-3, 3].
inline PauliPolynomial random_pauli_polynomial(std::mt19937_64 &rng, std::size_t nqubits, std::size_t max_terms = 3) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    std::uniform_int_distribution<int> letter(0, 3);
    std::vector<PauliTerm> terms;
    const std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
        PauliTerm term;
        term.coeff = random_rational(rng, -3, 3);
        if (sgn(term.coeff) == 0) term.coeff = 1;
        for (std::size_t q = 1; q <= nqubits; ++q) {
            int l = letter(rng);
            if (l < 3) term.factors[q] = static_cast<PauliOp>(l);
        }
        if (term.factors.empty()) term.factors[1] = PauliOp::Z;
        terms.push_back(std::move(term));
    }
    return PauliPolynomial(nqubits, std::move(terms));
}

/// Random skew-Hermitian d x d matrix with small rational entries.
inline SparseMatrix random_skew_hermitian(std::mt19937_64 &rng, std::size_t d, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < d; ++i) {
        if (keep(rng)) t.push_back({i, i, GaussianRational(Rational(0), random_rational(rng))});
        for (std::size_t j = i + 1; j < d; ++j) {
            if (!keep(rng)) continue;
            auto z = random_gaussian(rng);
            t.push_back({i, j, z});
            t.push_back({j, i, -z.conj()});
        }
    }
    return SparseMatrix::from_triplets(d, d, t);
}

}  // namespace qsym::testing

#endif  // QSYM_TESTS_TEST_SUPPORT_HPP
