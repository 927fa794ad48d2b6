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

#ifndef QSYM_ELIMINATION_HPP
#define QSYM_ELIMINATION_HPP

// Sparse Gaussian elimination over an exact field, shared by the
// Gaussian-rational and the prime-field code paths.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "qsym/gaussian_rational.hpp"
#include "qsym/modular.hpp"

namespace qsym::detail {

/// Field policy for Q(i).
struct ExactArith {
    using value_type = GaussianRational;
    static bool is_zero(const value_type &v) { return v.is_zero(); }
    static value_type one() { return GaussianRational(1); }
    static value_type mul(const value_type &a, const value_type &b) { return a * b; }
    static value_type sub(const value_type &a, const value_type &b) { return a - b; }
    static value_type neg(const value_type &a) { return -a; }
    static value_type inv(const value_type &a) { return a.inverse(); }
};

/// Field policy for F_p. Residues are stored in 32 bits (p < 2^31).
struct ModArith {
    using value_type = std::uint32_t;
    PrimeField field;
    bool is_zero(value_type v) const { return v == 0; }
    value_type one() const { return 1; }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(field.mul(a, b)); }
    value_type sub(value_type a, value_type b) const { return static_cast<value_type>(field.sub(a, b)); }
    value_type neg(value_type a) const { return static_cast<value_type>(field.neg(a)); }
    value_type inv(value_type a) const { return static_cast<value_type>(field.inv(a)); }
};

template <class V>
struct SparseVec {
    std::vector<std::uint32_t> idx;
    std::vector<V> val;

    std::size_t size() const { return idx.size(); }
    bool empty() const { return idx.empty(); }

    const V *find(std::uint32_t c) const {
        auto it = std::lower_bound(idx.begin(), idx.end(), c);
        return it != idx.end() && *it == c ? &val[static_cast<std::size_t>(it - idx.begin())] : nullptr;
    }
};

/// out = a - f*b, both sorted.
template <class Arith>
SparseVec<typename Arith::value_type> axpy(const Arith &ar, const SparseVec<typename Arith::value_type> &a,
                                           const typename Arith::value_type &f,
                                           const SparseVec<typename Arith::value_type> &b) {
    SparseVec<typename Arith::value_type> out;
    out.idx.reserve(a.size() + b.size());
    out.val.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a.idx[i] < b.idx[j])) {
            out.idx.push_back(a.idx[i]);
            out.val.push_back(a.val[i]);
            ++i;
        } else if (i == a.size() || b.idx[j] < a.idx[i]) {
            out.idx.push_back(b.idx[j]);
            out.val.push_back(ar.neg(ar.mul(f, b.val[j])));
            ++j;
        } else {
            auto v = ar.sub(a.val[i], ar.mul(f, b.val[j]));
            if (!ar.is_zero(v)) {
                out.idx.push_back(a.idx[i]);
                out.val.push_back(std::move(v));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

/// Right-looking sparse elimination with Markowitz-style pivoting: the
/// pivot row is an active row of minimal length and, inside it, the column
/// with the fewest active entries. Ties go to the lowest row, then column.
template <class Arith>
class SparseEliminator {
   public:
    using V = typename Arith::value_type;
    using Row = SparseVec<V>;

    SparseEliminator(Arith arith, std::size_t ncols, std::vector<Row> rows)
        : ar_(std::move(arith)), ncols_(ncols), rows_(std::move(rows)) {}

    /// Drop each pivot row once it has been applied. Only rank() stays
    /// meaningful afterwards; nullspace() needs the rows.
    void set_rank_only(bool on) { rank_only_ = on; }
    /// Gives up once the rows hold more than this many entries (0: no
    /// limit); aborted() then reports it and rank() is meaningless.
    void set_fill_limit(std::size_t limit) { fill_limit_ = limit; }
    /// Stops once the rows hold more than `floor` entries and (live
    /// columns) x (stored entries), the cost of a black-box method on what
    /// is left, has grown a quarter above its running minimum. aborted()
    /// is then set as well. 0 disables.
    void set_stop_when_costly(std::size_t floor) { costly_floor_ = floor; }
    bool aborted() const { return aborted_; }

    /// After an aborted run, the rank is rank() plus the rank of this
    /// matrix: the active rows over the columns they still touch,
    /// renumbered 0..n-1. Returns n.
    std::size_t remainder(std::vector<Row> &out) const {
        std::vector<std::uint32_t> slot(ncols_, UINT32_MAX);
        std::uint32_t n = 0;
        out.clear();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!active_[r]) continue;
            Row row = rows_[r];
            for (auto &c : row.idx) {
                if (slot[c] == UINT32_MAX) slot[c] = n++;
                c = slot[c];
            }
            out.push_back(std::move(row));
        }
        return n;
    }

    void run() {
        const std::size_t nr = rows_.size();
        active_.assign(nr, 1);
        col_count_.assign(ncols_, 0);
        col_rows_.assign(ncols_, {});
        std::size_t live_cols = 0;
        // Columns with a single active entry: pivoting there causes no fill.
        std::vector<std::uint32_t> singles;
        auto inc = [&](std::uint32_t c) {
            if (col_count_[c]++ == 0) ++live_cols;
            if (col_count_[c] == 1) singles.push_back(c);
        };
        auto dec = [&](std::uint32_t c) {
            if (--col_count_[c] == 0) --live_cols;
            if (col_count_[c] == 1) singles.push_back(c);
        };
        using Key = std::pair<std::size_t, std::uint32_t>;
        std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
        std::size_t stored = 0;
        for (std::uint32_t r = 0; r < nr; ++r) {
            stored += rows_[r].size();
            for (auto c : rows_[r].idx) {
                inc(c);
                col_rows_[c].push_back(r);
            }
            if (rows_[r].empty()) {
                active_[r] = 0;
            } else {
                queue.push({rows_[r].size(), r});
            }
        }
        // Counts only settle once every row is in; process singles in
        // ascending column order for determinism.
        singles.clear();
        for (std::uint32_t c = ncols_; c-- > 0;) {
            if (col_count_[c] == 1) singles.push_back(c);
        }
        std::vector<std::uint32_t> targets;
        std::size_t live = queue.size();
        double min_cost = static_cast<double>(live_cols) * static_cast<double>(stored);
        for (;;) {
            std::uint32_t r = 0;
            std::size_t best = 0;
            bool found = false;
            while (!found && !singles.empty()) {
                const std::uint32_t c = singles.back();
                singles.pop_back();
                if (col_count_[c] != 1) continue;
                for (auto t : col_rows_[c]) {
                    if (!active_[t]) continue;
                    auto it = std::lower_bound(rows_[t].idx.begin(), rows_[t].idx.end(), c);
                    if (it != rows_[t].idx.end() && *it == c) {
                        r = t;
                        best = static_cast<std::size_t>(it - rows_[t].idx.begin());
                        found = true;
                        break;
                    }
                }
            }
            while (!found && !queue.empty()) {
                // Stale keys pile up as rows change length; rebuild when
                // they dominate.
                if (queue.size() > 4 * live + 1024) {
                    std::vector<Key> keys;
                    keys.reserve(live);
                    for (std::uint32_t t = 0; t < nr; ++t) {
                        if (active_[t]) keys.push_back({rows_[t].size(), t});
                    }
                    queue = decltype(queue)(std::greater<Key>(), std::move(keys));
                    if (queue.empty()) break;
                }
                auto [len, t] = queue.top();
                queue.pop();
                if (!active_[t] || rows_[t].size() != len) continue;
                r = t;
                const Row &row = rows_[t];
                best = 0;
                for (std::size_t k = 1; k < row.size(); ++k) {
                    if (col_count_[row.idx[k]] < col_count_[row.idx[best]]) best = k;
                }
                found = true;
            }
            if (!found) break;
            Row &prow = rows_[r];
            const std::uint32_t pc = prow.idx[best];
            const V pinv = ar_.inv(prow.val[best]);
            active_[r] = 0;
            --live;
            for (auto c : prow.idx) dec(c);
            pivots_.push_back({r, pc});

            targets.clear();
            for (auto t : col_rows_[pc]) {
                if (t != r && active_[t]) targets.push_back(t);
            }
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            col_rows_[pc].clear();
            for (auto t : targets) {
                const V *tv = rows_[t].find(pc);
                if (tv == nullptr) continue;
                V factor = ar_.mul(*tv, pinv);
                Row updated = axpy(ar_, rows_[t], factor, prow);
                for (auto c : rows_[t].idx) dec(c);
                for (auto c : updated.idx) {
                    inc(c);
                    if (!rows_[t].find(c)) col_rows_[c].push_back(t);
                }
                stored = stored + updated.size() - rows_[t].size();
                rows_[t] = std::move(updated);
                if (rows_[t].empty()) {
                    active_[t] = 0;
                    --live;
                    rows_[t] = Row{};
                } else {
                    queue.push({rows_[t].size(), t});
                }
            }
            if (rank_only_) {
                stored -= rows_[r].size();
                rows_[r] = Row{};
            }
            if (fill_limit_ != 0 && stored > fill_limit_) {
                aborted_ = true;
                break;
            }
            if (costly_floor_ != 0) {
                const double cost = static_cast<double>(live_cols) * static_cast<double>(stored);
                min_cost = std::min(min_cost, cost);
                if (stored > costly_floor_ && cost > 1.25 * min_cost) {
                    aborted_ = true;
                    break;
                }
            }
        }
        col_rows_ = {};
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> &pivots() const { return pivots_; }

    /// One basis vector per non-pivot column c: x_c = 1, every other
    /// non-pivot coordinate 0. Solved by back substitution in reverse pivot
    /// order; a pivot row only references its own pivot, free columns and
    /// pivots chosen after it.
    std::vector<Row> nullspace() const {
        std::vector<char> is_pivot(ncols_, 0);
        for (auto [r, c] : pivots_) is_pivot[c] = 1;
        // expr[c] expresses a pivot variable over the free variables.
        std::vector<Row> expr(ncols_);
        std::vector<std::uint32_t> free_cols;
        for (std::uint32_t c = 0; c < ncols_; ++c) {
            if (!is_pivot[c]) {
                free_cols.push_back(c);
                expr[c].idx.push_back(c);
                expr[c].val.push_back(ar_.one());
            }
        }
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            auto [r, pc] = *it;
            const Row &row = rows_[r];
            V pinv = ar_.inv(*row.find(pc));
            Row acc;
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (row.idx[k] == pc) continue;
                acc = axpy(ar_, acc, ar_.mul(row.val[k], pinv), expr[row.idx[k]]);
            }
            expr[pc] = std::move(acc);
        }
        // Transpose expr (variable -> free coefficients) into basis vectors.
        std::vector<Row> basis(free_cols.size());
        std::vector<std::uint32_t> slot(ncols_, 0);
        for (std::uint32_t k = 0; k < free_cols.size(); ++k) slot[free_cols[k]] = k;
        for (std::uint32_t c = 0; c < ncols_; ++c) {
            const Row &e = expr[c];
            for (std::size_t k = 0; k < e.size(); ++k) {
                Row &b = basis[slot[e.idx[k]]];
                b.idx.push_back(c);
                b.val.push_back(e.val[k]);
            }
        }
        return basis;
    }

   private:
    Arith ar_;
    bool rank_only_ = false;
    bool aborted_ = false;
    std::size_t costly_floor_ = 0;
    std::size_t fill_limit_ = 0;
    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<char> active_;
    std::vector<std::uint32_t> col_count_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots_;
};

/// Reduced row echelon form of linearly independent rows, leftmost pivots.
/// The result depends only on the row space.
template <class Arith>
std::vector<SparseVec<typename Arith::value_type>> rref_independent(const Arith &ar,
                                                                    std::vector<SparseVec<typename Arith::value_type>> rows) {
    using V = typename Arith::value_type;
    std::vector<SparseVec<V>> done;
    while (!rows.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < rows.size(); ++k) {
            if (rows[k].idx.front() < rows[best].idx.front()) best = k;
        }
        SparseVec<V> p = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        V inv = ar.inv(p.val.front());
        for (auto &v : p.val) v = ar.mul(v, inv);
        const std::uint32_t pc = p.idx.front();
        auto reduce = [&](SparseVec<V> &r) {
            if (const V *f = r.find(pc)) {
                V factor = *f;
                r = axpy(ar, r, factor, p);
            }
        };
        for (auto &r : rows) reduce(r);
        for (auto &r : done) reduce(r);
        rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVec<V> &r) { return r.empty(); }),
                   rows.end());
        done.push_back(std::move(p));
    }
    return done;
}

}  // namespace qsym::detail

#endif  // QSYM_ELIMINATION_HPP
