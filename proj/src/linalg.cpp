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

#include "qsym/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "qsym/elimination.hpp"
#include "qsym/errors.hpp"

namespace qsym {

using detail::ExactArith;
using detail::ModArith;
using detail::SparseVec;

const char *rank_mode_name(RankMode mode) {
    switch (mode) {
        case RankMode::Exact:
            return "exact";
        case RankMode::Modular:
            return "modular";
        case RankMode::Auto:
            return "auto";
    }
    return "auto";
}

const char *rank_method_name(RankMethod method) { return method == RankMethod::Exact ? "exact" : "modular"; }

RankMode parse_rank_mode(const std::string &name) {
    if (name == "exact") return RankMode::Exact;
    if (name == "modular") return RankMode::Modular;
    if (name == "auto") return RankMode::Auto;
    throw_error(ErrorCode::InvalidArgument, "unknown rank mode '" + name + "' (expected exact, modular or auto)");
}

namespace {

class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

   private:
    std::vector<std::size_t> parent_;
};

// Uniform access to the two sparse storage formats.
template <class F>
void for_each_entry(const SparseMatrix &a, std::size_t r, F &&f) {
    for (const auto &e : a.row(r)) f(e.col, e);
}

template <class F>
void for_each_entry(const GaussianIntMatrix &a, std::size_t r, F &&f) {
    for (const auto *e = a.row_begin(r); e != a.row_end(r); ++e) f(e->col, *e);
}

const GaussianRational &exact_value(const SparseEntry &e) { return e.value; }
GaussianRational exact_value(const GaussianIntMatrix::Entry &e) {
    return {Rational(static_cast<long>(e.re)), Rational(static_cast<long>(e.im))};
}

std::optional<std::uint64_t> mod_value(const PrimeField &f, const SparseEntry &e) { return f.reduce(e.value); }
std::optional<std::uint64_t> mod_value(const PrimeField &f, const GaussianIntMatrix::Entry &e) {
    const auto p = static_cast<std::int64_t>(f.prime());
    auto m = [p](std::int64_t x) { return static_cast<std::uint64_t>(((x % p) + p) % p); };
    return f.add(m(e.re), f.mul(m(e.im), f.sqrt_minus_one()));
}

template <class Matrix>
std::vector<SparseVec<GaussianRational>> block_rows_exact(const Matrix &a, const SparseBlock &block,
                                                          const std::vector<std::uint32_t> &local) {
    std::vector<SparseVec<GaussianRational>> rows;
    rows.reserve(block.rows.size());
    for (auto r : block.rows) {
        SparseVec<GaussianRational> v;
        for_each_entry(a, r, [&](std::size_t c, const auto &e) {
            v.idx.push_back(local[c]);
            v.val.push_back(exact_value(e));
        });
        rows.push_back(std::move(v));
    }
    return rows;
}

// Rows of one block mapped into F_p, or nullopt if p divides a denominator.
template <class Matrix>
std::optional<std::vector<SparseVec<std::uint32_t>>> block_rows_mod(const Matrix &a, const SparseBlock &block,
                                                                   const std::vector<std::uint32_t> &local,
                                                                   const PrimeField &field) {
    std::vector<SparseVec<std::uint32_t>> rows;
    rows.reserve(block.rows.size());
    bool ok = true;
    for (auto r : block.rows) {
        SparseVec<std::uint32_t> v;
        for_each_entry(a, r, [&](std::size_t c, const auto &e) {
            auto m = mod_value(field, e);
            if (!m) {
                ok = false;
            } else if (*m != 0) {
                v.idx.push_back(local[c]);
                v.val.push_back(static_cast<std::uint32_t>(*m));
            }
        });
        if (!ok) return std::nullopt;
        rows.push_back(std::move(v));
    }
    return rows;
}

// Scales every row to a leading 1 and drops repeats; proportional rows add
// nothing to the rank and the constraint systems are full of them.
void drop_proportional_rows(const PrimeField &field, std::vector<SparseVec<std::uint32_t>> &rows) {
    struct RowHash {
        std::size_t operator()(const SparseVec<std::uint32_t> *v) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::size_t k = 0; k < v->size(); ++k) {
                h = (h ^ v->idx[k]) * 1099511628211ull;
                h = (h ^ v->val[k]) * 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };
    struct RowEq {
        bool operator()(const SparseVec<std::uint32_t> *a, const SparseVec<std::uint32_t> *b) const {
            return a->idx == b->idx && a->val == b->val;
        }
    };
    for (auto &v : rows) {
        if (v.empty()) continue;
        const std::uint64_t inv = field.inv(v.val.front());
        for (auto &x : v.val) x = static_cast<std::uint32_t>(field.mul(x, inv));
    }
    std::unordered_set<const SparseVec<std::uint32_t> *, RowHash, RowEq> seen;
    seen.reserve(rows.size());
    std::vector<char> keep(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) keep[r] = !rows[r].empty() && seen.insert(&rows[r]).second;
    seen.clear();
    std::size_t out = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!keep[r]) continue;
        if (out != r) rows[out] = std::move(rows[r]);
        ++out;
    }
    rows.resize(out);
    rows.shrink_to_fit();
}

class PrimeSource {
   public:
    explicit PrimeSource(std::uint64_t seed) : rng_(seed) {}
    const PrimeField &get(std::size_t k) {
        while (fields_.size() <= k) fields_.push_back(PrimeField::random(rng_));
        return fields_[k];
    }

   private:
    std::mt19937_64 rng_;
    std::vector<PrimeField> fields_;
};

// Reduction mod p < 2^31 by a Barrett step, and lazily reduced sums of
// products of residues.
class FastMod {
   public:
    explicit FastMod(std::uint64_t p)
        : p_(p), m_(~std::uint64_t{0} / p), big_((std::uint64_t{1} << 63) / (p * p) * (p * p)) {
        two64_ = (reduce(~std::uint64_t{0}) + 1) % p_;
    }
    std::uint64_t prime() const { return p_; }
    std::uint64_t reduce(std::uint64_t x) const {
        const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    /// acc + a*b, kept below 2^63 by subtracting a multiple of p^2.
    std::uint64_t fma(std::uint64_t acc, std::uint64_t a, std::uint64_t b) const {
        acc += a * b;
        return acc >= (std::uint64_t{1} << 63) ? acc - big_ : acc;
    }
    std::uint64_t reduce_wide(unsigned __int128 x) const {
        const std::uint64_t hi = reduce(static_cast<std::uint64_t>(x >> 64));
        const std::uint64_t s = reduce(hi * two64_) + reduce(static_cast<std::uint64_t>(x));
        return s >= p_ ? s - p_ : s;
    }

   private:
    std::uint64_t p_, m_, big_, two64_ = 0;
};

// Incremental Berlekamp-Massey over F_p: the shortest linear recurrence of
// the sequence fed so far.
class BerlekampMassey {
   public:
    BerlekampMassey(const PrimeField &field, const FastMod &fm) : field_(field), fm_(fm), c_{1}, b_{1} {}

    void push(std::uint64_t s) {
        seq_.push_back(s);
        const std::size_t n = seq_.size() - 1;
        std::uint64_t acc = s;
        const std::size_t top = std::min(len_, c_.size() - 1);
        for (std::size_t i = 1; i <= top; ++i) acc = fm_.fma(acc, c_[i], seq_[n - i]);
        const std::uint64_t d = fm_.reduce(acc);
        if (d == 0) {
            ++shift_;
            ++zero_run_;
            return;
        }
        zero_run_ = 0;
        const std::uint64_t coef = fm_.mul(d, field_.inv(bd_));
        std::vector<std::uint64_t> prev;
        const bool grow = 2 * len_ <= n;
        if (grow) prev = c_;
        if (c_.size() < b_.size() + shift_) c_.resize(b_.size() + shift_, 0);
        for (std::size_t i = 0; i < b_.size(); ++i) c_[i + shift_] = fm_.sub(c_[i + shift_], fm_.mul(coef, b_[i]));
        if (grow) {
            len_ = n + 1 - len_;
            b_ = std::move(prev);
            bd_ = d;
            shift_ = 1;
        } else {
            ++shift_;
        }
    }

    std::size_t length() const { return len_; }
    std::size_t terms() const { return seq_.size(); }
    /// Consecutive zero discrepancies at the end of the sequence.
    std::size_t zero_run() const { return zero_run_; }
    /// Constant term of the minimal polynomial x^L + c_1 x^(L-1) + ... + c_L.
    std::uint64_t constant_term() const { return len_ < c_.size() ? c_[len_] : 0; }

   private:
    const PrimeField &field_;
    const FastMod &fm_;
    std::vector<std::uint64_t> seq_;
    std::vector<std::uint64_t> c_, b_;
    std::size_t len_ = 0;
    std::size_t shift_ = 1;
    std::size_t zero_run_ = 0;
    std::uint64_t bd_ = 1;
};

// Black-box rank over F_p (Wiedemann). With random diagonal D1, D2 the
// symmetric matrix B = D1 A^T D2 A D1 (or D1 A D2 A^T D1 when A is wide)
// has the rank of A and a minimal polynomial x^e f(x), e <= 1,
// deg f = rank, with high probability. The minimal polynomial comes from
// Berlekamp-Massey on u^T B^k v. Memory stays linear in nnz. Like
// elimination mod p, the result never exceeds the true rank.
std::size_t wiedemann_rank(const PrimeField &field, std::size_t ncols,
                           const std::vector<SparseVec<std::uint32_t>> &rows, std::uint64_t seed) {
    const std::uint64_t p = field.prime();
    const FastMod fm(p);
    const std::size_t nrows = rows.size();
    if (nrows == 0 || ncols == 0) return 0;
    // Compressed rows.
    std::vector<std::size_t> start(nrows + 1, 0);
    for (std::size_t r = 0; r < nrows; ++r) start[r + 1] = start[r] + rows[r].size();
    std::vector<std::uint32_t> idx(start.back());
    std::vector<std::uint32_t> val(start.back());
    for (std::size_t r = 0; r < nrows; ++r) {
        std::copy(rows[r].idx.begin(), rows[r].idx.end(), idx.begin() + static_cast<std::ptrdiff_t>(start[r]));
        std::copy(rows[r].val.begin(), rows[r].val.end(), val.begin() + static_cast<std::ptrdiff_t>(start[r]));
    }

    // B acts on F_p^n with n = min(rows, cols).
    const bool col_side = ncols <= nrows;
    const std::size_t n = col_side ? ncols : nrows;
    const std::size_t m = col_side ? nrows : ncols;
    std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ull));
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    std::vector<std::uint64_t> d1(n), d2(m), u(n), w(n);
    for (auto &x : d1) x = nonzero(rng);
    for (auto &x : d2) x = nonzero(rng);
    for (auto &x : u) x = nonzero(rng);
    for (auto &x : w) x = nonzero(rng);

    // Products of residues are below 2^62; 128-bit sums never overflow and
    // need no reduction inside the loops.
    using Wide = unsigned __int128;
    std::vector<std::uint64_t> scaled(n), inner(m);
    std::vector<Wide> acc_n(n), acc_m(m);
    // w <- D1 M^T D2 M D1 w with M = A (tall) or M = A^T (wide).
    auto step = [&]() {
        for (std::size_t k = 0; k < n; ++k) scaled[k] = fm.mul(d1[k], w[k]);
        if (col_side) {
            // One pass: gather row r against x, then scatter it back.
            std::fill(acc_n.begin(), acc_n.end(), 0);
            for (std::size_t r = 0; r < nrows; ++r) {
                Wide acc = 0;
                for (std::size_t k = start[r]; k < start[r + 1]; ++k)
                    acc += static_cast<std::uint64_t>(val[k]) * scaled[idx[k]];
                const std::uint64_t y = fm.mul(fm.reduce_wide(acc), d2[r]);
                if (y == 0) continue;
                for (std::size_t k = start[r]; k < start[r + 1]; ++k) acc_n[idx[k]] += static_cast<std::uint64_t>(val[k]) * y;
            }
            for (std::size_t k = 0; k < n; ++k) w[k] = fm.mul(d1[k], fm.reduce_wide(acc_n[k]));
        } else {
            std::fill(acc_m.begin(), acc_m.end(), 0);
            for (std::size_t r = 0; r < nrows; ++r) {
                const std::uint64_t y = scaled[r];
                if (y == 0) continue;
                for (std::size_t k = start[r]; k < start[r + 1]; ++k) acc_m[idx[k]] += static_cast<std::uint64_t>(val[k]) * y;
            }
            for (std::size_t c = 0; c < m; ++c) inner[c] = fm.mul(d2[c], fm.reduce_wide(acc_m[c]));
            for (std::size_t r = 0; r < nrows; ++r) {
                Wide acc = 0;
                for (std::size_t k = start[r]; k < start[r + 1]; ++k)
                    acc += static_cast<std::uint64_t>(val[k]) * inner[idx[k]];
                w[r] = fm.mul(d1[r], fm.reduce_wide(acc));
            }
        }
    };
    auto dot_u = [&]() {
        Wide acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += u[k] * w[k];
        return fm.reduce_wide(acc);
    };

    // Stop once the recurrence has survived kConfirm further terms beyond
    // the 2L needed to determine it, or at 2n + kConfirm terms.
    constexpr std::size_t kConfirm = 40;
    BerlekampMassey bm(field, fm);
    bm.push(dot_u());
    while (bm.terms() < 2 * n + kConfirm) {
        if (bm.zero_run() >= kConfirm && bm.terms() >= 2 * bm.length() + kConfirm) break;
        step();
        bm.push(dot_u());
    }
    const std::size_t len = bm.length();
    if (len == 0) return 0;
    return bm.constant_term() == 0 ? len - 1 : len;
}

template <class Matrix>
std::size_t modular_block_rank(const Matrix &a, const SparseBlock &block,
                               const std::vector<std::uint32_t> &local, PrimeSource &primes,
                               std::optional<std::uint64_t> &first_prime, const RankOptions &options) {
    // Each prime gives a lower bound on the rank; two independent primes
    // are taken and the larger bound kept.
    std::size_t best = 0;
    int accepted = 0;
    for (std::size_t k = 0; accepted < 2; ++k) {
        const PrimeField &field = primes.get(k);
        auto rows = block_rows_mod(a, block, local, field);
        if (!rows) continue;
        drop_proportional_rows(field, *rows);
        // Eliminate while that is cheap; once fill-in makes it expensive,
        // finish what is left with Wiedemann.
        detail::SparseEliminator<ModArith> elim(ModArith{field}, block.cols.size(), std::move(*rows));
        elim.set_rank_only(true);
        if (options.fill_limit != 0) {
            elim.set_fill_limit(static_cast<std::size_t>(options.fill_limit));
            elim.set_stop_when_costly(static_cast<std::size_t>(options.fill_limit / 16));
        }
        elim.run();
        std::size_t r = elim.rank();
        if (elim.aborted()) {
            std::vector<SparseVec<std::uint32_t>> rest;
            const std::size_t ncols = elim.remainder(rest);
            elim = detail::SparseEliminator<ModArith>(ModArith{field}, 0, {});
            drop_proportional_rows(field, rest);
            r += wiedemann_rank(field, ncols, rest, options.seed);
        }
        best = std::max(best, r);
        if (!first_prime) first_prime = field.prime();
        ++accepted;
    }
    return best;
}

template <class Matrix>
std::vector<std::uint32_t> local_index(const Matrix &a, const SparseBlock &block) {
    std::vector<std::uint32_t> local(a.ncols(), 0);
    for (std::uint32_t k = 0; k < block.cols.size(); ++k) local[block.cols[k]] = k;
    return local;
}

}  // namespace

namespace {

template <class Matrix>
std::vector<SparseBlock> blocks_of(const Matrix &a) {
    DisjointSets sets(a.ncols());
    std::vector<char> used(a.ncols(), 0);
    std::vector<std::size_t> first_col(a.nrows(), SIZE_MAX);
    for (std::size_t r = 0; r < a.nrows(); ++r) {
        for_each_entry(a, r, [&](std::size_t c, const auto &) {
            used[c] = 1;
            if (first_col[r] == SIZE_MAX) first_col[r] = c;
            sets.unite(first_col[r], c);
        });
    }
    std::vector<std::size_t> block_of(a.ncols(), SIZE_MAX);
    std::vector<SparseBlock> blocks;
    for (std::size_t c = 0; c < a.ncols(); ++c) {
        if (!used[c]) continue;
        std::size_t root = sets.find(c);
        if (block_of[root] == SIZE_MAX) {
            block_of[root] = blocks.size();
            blocks.emplace_back();
        }
        blocks[block_of[root]].cols.push_back(c);
    }
    for (std::size_t r = 0; r < a.nrows(); ++r) {
        if (first_col[r] == SIZE_MAX) continue;
        blocks[block_of[sets.find(first_col[r])]].rows.push_back(r);
    }
    return blocks;
}

template <class Matrix>
RankResult rank_impl(const Matrix &a, const RankOptions &options) {
    RankResult result;
    PrimeSource primes(options.seed);
    for (const auto &block : blocks_of(a)) {
        auto local = local_index(a, block);
        const std::uint64_t size = static_cast<std::uint64_t>(block.rows.size()) * block.cols.size();
        const bool modular = options.mode == RankMode::Modular ||
                             (options.mode == RankMode::Auto && size > options.modular_threshold);
        if (modular) {
            result.rank += modular_block_rank(a, block, local, primes, result.prime, options);
            result.method = RankMethod::Modular;
        } else {
            detail::SparseEliminator<ExactArith> elim(ExactArith{}, block.cols.size(),
                                                      block_rows_exact(a, block, local));
            elim.set_rank_only(true);
            elim.run();
            result.rank += elim.rank();
        }
    }
    if (result.method == RankMethod::Exact) result.prime.reset();
    return result;
}

}  // namespace

std::vector<SparseBlock> block_decomposition(const SparseMatrix &a) { return blocks_of(a); }
std::vector<SparseBlock> block_decomposition(const GaussianIntMatrix &a) { return blocks_of(a); }

void GaussianIntMatrix::push_row(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry &x, const Entry &y) { return x.col < y.col; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].col >= ncols_) throw_error(ErrorCode::IndexOutOfRange, "column outside the matrix");
        if (out > 0 && entries[out - 1].col == entries[k].col) {
            auto &acc = entries[out - 1];
            if (__builtin_add_overflow(acc.re, entries[k].re, &acc.re) ||
                __builtin_add_overflow(acc.im, entries[k].im, &acc.im)) {
                throw_error(ErrorCode::BudgetExceeded, "integer constraint entry overflows 64 bits");
            }
        } else {
            entries[out++] = entries[k];
        }
    }
    entries.resize(out);
    for (const auto &e : entries) {
        if (e.re != 0 || e.im != 0) entries_.push_back(e);
    }
    row_ptr_.push_back(entries_.size());
}

SparseMatrix GaussianIntMatrix::to_sparse() const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (std::size_t r = 0; r < nrows(); ++r) {
        for (const auto *e = row_begin(r); e != row_end(r); ++e) t.push_back({r, e->col, exact_value(*e)});
    }
    return SparseMatrix::from_triplets(nrows(), ncols_, t);
}

SparseMatrix kron(const SparseMatrix &a, const SparseMatrix &b) {
    std::vector<Triplet> t;
    t.reserve(a.nnz() * b.nnz());
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        for (const auto &ea : a.row(i)) {
            for (std::size_t k = 0; k < b.nrows(); ++k) {
                for (const auto &eb : b.row(k)) {
                    t.push_back({i * b.nrows() + k, ea.col * b.ncols() + eb.col, ea.value * eb.value});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(a.nrows() * b.nrows(), a.ncols() * b.ncols(), t);
}

SparseMatrix vec(const SparseMatrix &s) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < s.nrows(); ++i) {
        for (const auto &e : s.row(i)) t.push_back({e.col * s.nrows() + i, 0, e.value});
    }
    return SparseMatrix::from_triplets(s.nrows() * s.ncols(), 1, t);
}

SparseMatrix unvec(const SparseMatrix &v, std::size_t nrows, std::size_t ncols) {
    if (v.ncols() != 1 || v.nrows() != nrows * ncols) {
        throw_error(ErrorCode::DimensionMismatch, "unvec: vector length does not match target shape");
    }
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < v.nrows(); ++k) {
        for (const auto &e : v.row(k)) t.push_back({k % nrows, k / nrows, e.value});
    }
    return SparseMatrix::from_triplets(nrows, ncols, t);
}

SparseMatrix commutator(const SparseMatrix &a, const SparseMatrix &b) {
    if (!a.is_square() || !b.is_square() || a.nrows() != b.nrows()) {
        throw_error(ErrorCode::DimensionMismatch, "commutator needs square matrices of equal dimension");
    }
    return a * b - b * a;
}

RankResult rank(const SparseMatrix &a, const RankOptions &options) { return rank_impl(a, options); }
RankResult rank(const GaussianIntMatrix &a, const RankOptions &options) { return rank_impl(a, options); }

std::vector<SparseMatrix> nullspace_basis(const SparseMatrix &a) {
    std::vector<SparseVec<GaussianRational>> vectors;
    std::vector<char> used(a.ncols(), 0);
    for (const auto &block : block_decomposition(a)) {
        for (auto c : block.cols) used[c] = 1;
        auto local = local_index(a, block);
        detail::SparseEliminator<ExactArith> elim(ExactArith{}, block.cols.size(), block_rows_exact(a, block, local));
        elim.run();
        auto basis = detail::rref_independent(ExactArith{}, elim.nullspace());
        for (auto &v : basis) {
            for (auto &i : v.idx) i = static_cast<std::uint32_t>(block.cols[i]);
            vectors.push_back(std::move(v));
        }
    }
    for (std::uint32_t c = 0; c < a.ncols(); ++c) {
        if (used[c]) continue;
        SparseVec<GaussianRational> unit;
        unit.idx.push_back(c);
        unit.val.push_back(GaussianRational(1));
        vectors.push_back(std::move(unit));
    }
    // Blocks have disjoint supports, so ordering by pivot yields the RREF.
    std::sort(vectors.begin(), vectors.end(),
              [](const auto &x, const auto &y) { return x.idx.front() < y.idx.front(); });
    std::vector<SparseMatrix> out;
    out.reserve(vectors.size());
    for (const auto &v : vectors) {
        std::vector<Triplet> t;
        for (std::size_t k = 0; k < v.size(); ++k) t.push_back({v.idx[k], 0, v.val[k]});
        out.push_back(SparseMatrix::from_triplets(a.ncols(), 1, t));
    }
    return out;
}

SparseMatrix primitive_form(const SparseMatrix &m) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto &t : m.triplets()) {
        for (const Rational *q : {&t.value.re(), &t.value.im()}) {
            if (sgn(*q) == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q->get_num_mpz_t());
        }
    }
    if (num_gcd == 0) return m;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    return GaussianRational(scale) * m;
}

GaussianRational hs_inner(const SparseMatrix &a, const SparseMatrix &b) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
        throw_error(ErrorCode::DimensionMismatch, "hs_inner needs equal shapes");
    }
    GaussianRational sum;
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        const auto &ra = a.row(i);
        const auto &rb = b.row(i);
        std::size_t p = 0, q = 0;
        while (p < ra.size() && q < rb.size()) {
            if (ra[p].col < rb[q].col) {
                ++p;
            } else if (rb[q].col < ra[p].col) {
                ++q;
            } else {
                sum += ra[p].value.conj() * rb[q].value;
                ++p;
                ++q;
            }
        }
    }
    return sum;
}

std::vector<std::pair<std::size_t, Rational>> real_coordinates(const SparseMatrix &m) {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (const auto &e : m.row(i)) {
            std::size_t base = 2 * (i * m.ncols() + e.col);
            if (sgn(e.value.re()) != 0) out.emplace_back(base, e.value.re());
            if (sgn(e.value.im()) != 0) out.emplace_back(base + 1, e.value.im());
        }
    }
    return out;
}

std::size_t real_span_rank(const std::vector<SparseMatrix> &mats) {
    if (mats.empty()) return 0;
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < mats.size(); ++k) {
        if (mats[k].nrows() != mats[0].nrows() || mats[k].ncols() != mats[0].ncols()) {
            throw_error(ErrorCode::DimensionMismatch, "real_span_rank needs equal shapes");
        }
        for (auto &[c, q] : real_coordinates(mats[k])) t.push_back({k, c, GaussianRational(q)});
    }
    auto flat = SparseMatrix::from_triplets(mats.size(), 2 * mats[0].nrows() * mats[0].ncols(), t);
    return rank(flat, RankOptions{RankMode::Exact}).rank;
}

namespace {

SparseMatrix stack_vecs(const std::vector<SparseMatrix> &mats) {
    const std::size_t width = mats.empty() ? 0 : mats[0].nrows() * mats[0].ncols();
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < mats.size(); ++k) {
        if (mats[k].nrows() * mats[k].ncols() != width || mats[k].nrows() != mats[0].nrows()) {
            throw_error(ErrorCode::DimensionMismatch, "span computations need equal shapes");
        }
        for (std::size_t i = 0; i < mats[k].nrows(); ++i) {
            for (const auto &e : mats[k].row(i)) t.push_back({k, e.col * mats[k].nrows() + i, e.value});
        }
    }
    return SparseMatrix::from_triplets(mats.size(), width, t);
}

}  // namespace

std::vector<SparseMatrix> canonical_span_basis(const std::vector<SparseMatrix> &mats) {
    if (mats.empty()) return {};
    SparseMatrix stacked = stack_vecs(mats);
    std::vector<SparseVec<GaussianRational>> rows;
    for (std::size_t r = 0; r < stacked.nrows(); ++r) {
        SparseVec<GaussianRational> v;
        for (const auto &e : stacked.row(r)) {
            v.idx.push_back(static_cast<std::uint32_t>(e.col));
            v.val.push_back(e.value);
        }
        if (!v.empty()) rows.push_back(std::move(v));
    }
    auto reduced = detail::rref_independent(ExactArith{}, std::move(rows));
    std::vector<SparseMatrix> out;
    for (const auto &v : reduced) {
        std::vector<Triplet> t;
        for (std::size_t k = 0; k < v.size(); ++k) t.push_back({v.idx[k], 0, v.val[k]});
        out.push_back(unvec(SparseMatrix::from_triplets(stacked.ncols(), 1, t), mats[0].nrows(), mats[0].ncols()));
    }
    return out;
}

bool in_complex_span(const SparseMatrix &m, const std::vector<SparseMatrix> &mats) {
    if (mats.empty()) return m.is_zero();
    std::vector<SparseMatrix> extended = mats;
    extended.push_back(m);
    RankOptions exact{RankMode::Exact};
    return rank(stack_vecs(mats), exact).rank == rank(stack_vecs(extended), exact).rank;
}

}  // namespace qsym
