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

#include "qsym/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "qsym/errors.hpp"

namespace qsym {

namespace {

void check_generators(const std::vector<SparseMatrix> &gens, std::size_t dim) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].nrows() != dim || gens[k].ncols() != dim) {
            throw_error(ErrorCode::DimensionMismatch, "generator " + std::to_string(k + 1) + " is " +
                                                          std::to_string(gens[k].nrows()) + "x" +
                                                          std::to_string(gens[k].ncols()) + ", expected " +
                                                          std::to_string(dim) + "x" + std::to_string(dim));
        }
    }
}

// Splits indices 0..n-1 further by the diagonal of d. Returns true if the
// number of classes grew.
bool refine_classes(std::vector<std::uint32_t> &cls, const SparseMatrix &d) {
    std::map<std::pair<std::uint32_t, GaussianRational>, std::uint32_t> ids;
    std::uint32_t before = 0;
    for (auto c : cls) before = std::max(before, c + 1);
    for (std::size_t a = 0; a < cls.size(); ++a) {
        auto key = std::make_pair(cls[a], d.at(a, a));
        auto it = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size())).first;
        cls[a] = it->second;
    }
    return ids.size() > before;
}

// Block pieces E_a M E_b of m between the current classes.
std::vector<SparseMatrix> split_by_classes(const SparseMatrix &m, const std::vector<std::uint32_t> &cls) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Triplet>> groups;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (const auto &e : m.row(i)) groups[{cls[i], cls[e.col]}].push_back({i, e.col, e.value});
    }
    std::vector<SparseMatrix> out;
    out.reserve(groups.size());
    for (const auto &[key, t] : groups) out.push_back(SparseMatrix::from_triplets(m.nrows(), m.ncols(), t));
    return out;
}

// Per-row int64 copies of the (Gaussian-integer) entries of m.
std::pair<std::vector<std::vector<std::int64_t>>, std::vector<std::vector<std::int64_t>>> integer_entries(
    const SparseMatrix &m) {
    std::vector<std::vector<std::int64_t>> re(m.nrows()), im(m.nrows());
    auto narrow = [](const Rational &q) {
        if (q.get_den() != 1 || !q.get_num().fits_slong_p() || abs(q.get_num()) > (mpz_class(1) << 61)) {
            throw_error(ErrorCode::BudgetExceeded, "generator entries too large for the integer constraint system");
        }
        return static_cast<std::int64_t>(q.get_num().get_si());
    };
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (const auto &e : m.row(i)) {
            re[i].push_back(narrow(e.value.re()));
            im[i].push_back(narrow(e.value.im()));
        }
    }
    return {std::move(re), std::move(im)};
}

SparseMatrix basis_vector_to_matrix(const SparseMatrix &v, const CommutantSystem &sys) {
    std::vector<Triplet> t;
    for (std::size_t u = 0; u < v.nrows(); ++u) {
        const auto &row = v.row(u);
        if (row.empty()) continue;
        std::size_t idx = sys.unknown_vec_index[u];
        t.push_back({idx % sys.n, idx / sys.n, row.front().value});
    }
    return SparseMatrix::from_triplets(sys.n, sys.n, t);
}

SymmetryDimension solve_dimension(const CommutantSystem &sys, const RankOptions &options) {
    SymmetryDimension out;
    out.unknowns = sys.unknown_vec_index.size();
    out.rank = rank(sys.constraints, options);
    out.dim = out.unknowns - out.rank.rank;
    return out;
}

std::vector<SparseMatrix> solve_basis(const CommutantSystem &sys) {
    std::vector<SparseMatrix> basis;
    for (const auto &v : nullspace_basis(sys.constraints.to_sparse())) basis.push_back(basis_vector_to_matrix(v, sys));
    return basis;
}

std::vector<SparseMatrix> lifted(const std::vector<SparseMatrix> &gens) {
    std::vector<SparseMatrix> out;
    out.reserve(gens.size());
    for (const auto &g : gens) out.push_back(tensor_square_lift(g));
    return out;
}

}  // namespace

CommutantSystem build_commutant_system(const std::vector<SparseMatrix> &generators, std::size_t n) {
    check_generators(generators, n);
    std::vector<SparseMatrix> pieces;
    for (const auto &g : generators) {
        if (!g.is_zero()) pieces.push_back(primitive_form(g));
    }

    std::vector<std::uint32_t> cls(n, 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &p : pieces) {
            if (p.is_diagonal() && refine_classes(cls, p)) changed = true;
        }
        std::vector<SparseMatrix> next;
        for (const auto &p : pieces) {
            if (p.is_diagonal()) continue;  // fully encoded by the classes now
            auto parts = split_by_classes(p, cls);
            if (parts.size() > 1) changed = true;
            for (auto &q : parts) next.push_back(primitive_form(q));
        }
        pieces = std::move(next);
    }

    std::uint32_t nclasses = 0;
    for (auto c : cls) nclasses = std::max(nclasses, c + 1);
    std::vector<std::vector<std::size_t>> members(nclasses);
    std::vector<std::size_t> pos(n);
    for (std::size_t a = 0; a < n; ++a) {
        pos[a] = members[cls[a]].size();
        members[cls[a]].push_back(a);
    }

    // Unknown S(a, b) exists iff cls[a] == cls[b]; numbered in vec order.
    CommutantSystem sys;
    sys.n = n;
    std::vector<std::size_t> base(n);
    for (std::size_t b = 0; b < n; ++b) {
        base[b] = sys.unknown_vec_index.size();
        for (std::size_t a : members[cls[b]]) sys.unknown_vec_index.push_back(b * n + a);
    }
    auto unknown = [&](std::size_t a, std::size_t b) { return base[b] + pos[a]; };

    // (MS - SM)(i, j) = sum_k M(i,k) S(k,j) - sum_k S(i,k) M(k,j)
    sys.constraints = GaussianIntMatrix(sys.unknown_vec_index.size());
    for (const auto &m : pieces) {
        const SparseMatrix mt = m.transpose();
        std::vector<std::uint64_t> eqs;
        auto add_candidates = [&](const SparseMatrix &src, bool by_row) {
            for (std::size_t x = 0; x < n; ++x) {
                const auto &r = src.row(x);
                if (r.empty()) continue;
                std::vector<std::uint32_t> seen;
                for (const auto &e : r) seen.push_back(cls[e.col]);
                std::sort(seen.begin(), seen.end());
                seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
                for (auto c : seen) {
                    for (std::size_t y : members[c]) eqs.push_back(by_row ? x * n + y : y * n + x);
                }
            }
        };
        add_candidates(m, true);
        add_candidates(mt, false);
        std::sort(eqs.begin(), eqs.end());
        eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());

        const auto [re, im] = integer_entries(m);
        const auto [re_t, im_t] = integer_entries(mt);
        std::vector<GaussianIntMatrix::Entry> row;
        for (auto eq : eqs) {
            const std::size_t i = eq / n, j = eq % n;
            row.clear();
            const auto &mi = m.row(i);
            for (std::size_t k = 0; k < mi.size(); ++k) {
                if (cls[mi[k].col] == cls[j]) {
                    row.push_back({static_cast<std::uint32_t>(unknown(mi[k].col, j)), re[i][k], im[i][k]});
                }
            }
            const auto &mj = mt.row(j);
            for (std::size_t k = 0; k < mj.size(); ++k) {
                if (cls[mj[k].col] == cls[i]) {
                    row.push_back({static_cast<std::uint32_t>(unknown(i, mj[k].col)), -re_t[j][k], -im_t[j][k]});
                }
            }
            sys.constraints.push_row(row);
        }
    }
    return sys;
}

SparseMatrix commutator_constraint(const SparseMatrix &m) {
    if (!m.is_square()) throw_error(ErrorCode::DimensionMismatch, "commutator constraint needs a square matrix");
    auto id = SparseMatrix::identity(m.nrows());
    return kron(id, m) - kron(m.transpose(), id);
}

SparseMatrix tensor_square_lift(const SparseMatrix &m) {
    if (!m.is_square()) throw_error(ErrorCode::DimensionMismatch, "tensor-square lift needs a square matrix");
    auto id = SparseMatrix::identity(m.nrows());
    return kron(m, id) + kron(id, m);
}

SparseMatrix constraint_operator(const SparseMatrix &m) { return commutator_constraint(tensor_square_lift(m)); }

SparseMatrix swap_matrix(std::size_t d) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) t.push_back({j * d + i, i * d + j, GaussianRational(1)});
    }
    return SparseMatrix::from_triplets(d * d, d * d, t);
}

std::pair<SparseMatrix, SparseMatrix> symmetric_split_basis(std::size_t d) {
    std::vector<Triplet> b, inv;
    const GaussianRational half(Rational(1, 2));
    std::size_t col = 0;
    for (std::size_t a = 0; a < d; ++a) {
        b.push_back({a * d + a, col, GaussianRational(1)});
        inv.push_back({col++, a * d + a, GaussianRational(1)});
    }
    const std::size_t npairs = d * (d - 1) / 2;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t c = a + 1; c < d; ++c, ++col) {
            const std::size_t anti = col + npairs;
            b.push_back({a * d + c, col, GaussianRational(1)});
            b.push_back({c * d + a, col, GaussianRational(1)});
            b.push_back({a * d + c, anti, GaussianRational(1)});
            b.push_back({c * d + a, anti, GaussianRational(-1)});
            inv.push_back({col, a * d + c, half});
            inv.push_back({col, c * d + a, half});
            inv.push_back({anti, a * d + c, half});
            inv.push_back({anti, c * d + a, -half});
        }
    }
    return {SparseMatrix::from_triplets(d * d, d * d, b), SparseMatrix::from_triplets(d * d, d * d, inv)};
}

SymmetryBasis commutant(const std::vector<SparseMatrix> &generators, std::size_t dim) {
    auto basis = solve_basis(build_commutant_system(generators, dim));
    return {basis.size(), std::move(basis), SymmetryKind::Linear};
}

SymmetryDimension commutant_dimension(const std::vector<SparseMatrix> &generators, std::size_t dim,
                                      const RankOptions &options) {
    return solve_dimension(build_commutant_system(generators, dim), options);
}

SymmetryBasis quadratic_commutant(const std::vector<SparseMatrix> &generators, std::size_t dim) {
    check_generators(generators, dim);
    auto basis = solve_basis(build_commutant_system(lifted(generators), dim * dim));
    return {basis.size(), std::move(basis), SymmetryKind::Quadratic};
}

SymmetryDimension quadratic_commutant_dimension(const std::vector<SparseMatrix> &generators, std::size_t dim,
                                                const RankOptions &options) {
    check_generators(generators, dim);
    // Lifts commute with the swap, so in the split basis they are block
    // diagonal and the system falls apart into four independent parts.
    const auto [b, b_inv] = symmetric_split_basis(dim);
    std::vector<SparseMatrix> split;
    for (const auto &l : lifted(generators)) split.push_back(b_inv * l * b);
    return solve_dimension(build_commutant_system(split, dim * dim), options);
}

std::vector<SparseMatrix> center_of_commutant(const std::vector<SparseMatrix> &generators, std::size_t dim) {
    auto all = generators;
    for (auto &s : commutant(generators, dim).basis) all.push_back(std::move(s));
    return commutant(all, dim).basis;
}

CentralProjectionData central_projections(const std::vector<SparseMatrix> &center_basis,
                                          const std::vector<SparseMatrix> &p_set,
                                          const std::vector<SparseMatrix> &q_set, const RankOptions &options) {
    std::vector<SparseMatrix> all = p_set;
    all.insert(all.end(), q_set.begin(), q_set.end());
    for (const auto &c : center_basis) {
        if (!c.is_square()) throw_error(ErrorCode::DimensionMismatch, "center element is not square");
        check_generators(all, c.nrows());
    }
    std::vector<Triplet> t;
    for (std::size_t a = 0; a < center_basis.size(); ++a) {
        for (std::size_t b = 0; b < all.size(); ++b) t.push_back({a, b, hs_inner(center_basis[a], all[b])});
    }
    CentralProjectionData out;
    out.center_basis = center_basis;
    out.t_full = SparseMatrix::from_triplets(center_basis.size(), all.size(), t);
    std::erase_if(t, [&](const Triplet &x) { return x.col >= p_set.size(); });
    out.t_restricted = SparseMatrix::from_triplets(center_basis.size(), p_set.size(), t);
    out.rank_full = rank(out.t_full, options);
    out.rank_restricted = rank(out.t_restricted, options);
    return out;
}

const char *verdict_name(Verdict v) { return v == Verdict::Simulable ? "simulable" : "not_simulable"; }

const char *condition_name(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::Holds:
            return "holds";
        case ConditionStatus::Fails:
            return "fails";
        case ConditionStatus::Skipped:
            return "skipped";
    }
    return "?";
}

const char *mutual_relation_name(MutualRelation r) {
    switch (r) {
        case MutualRelation::Equal:
            return "equal";
        case MutualRelation::PStrictlyLarger:
            return "p_strictly_larger";
        case MutualRelation::QStrictlyLarger:
            return "q_strictly_larger";
        case MutualRelation::Incomparable:
            return "incomparable";
    }
    return "?";
}

SimulabilityReport decide_sets(std::size_t dim, const std::vector<SparseMatrix> &p_set,
                               const std::vector<SparseMatrix> &q_set, const DecideOptions &options) {
    using clock = std::chrono::steady_clock;
    SimulabilityReport rep;
    auto timed = [&](const char *phase, auto &&fn) {
        auto start = clock::now();
        fn();
        rep.timings[phase] = std::chrono::duration<double>(clock::now() - start).count();
    };
    std::vector<SparseMatrix> pq = p_set;
    pq.insert(pq.end(), q_set.begin(), q_set.end());

    timed("quadratic_symmetries", [&] {
        rep.quadratic_p = quadratic_commutant_dimension(p_set, dim, options.rank);
        rep.quadratic_pq = quadratic_commutant_dimension(pq, dim, options.rank);
    });
    rep.condition_a = rep.quadratic_p.dim == rep.quadratic_pq.dim ? ConditionStatus::Holds : ConditionStatus::Fails;
    timed("linear_symmetries", [&] {
        rep.linear_p = commutant_dimension(p_set, dim, options.rank);
        rep.linear_pq = commutant_dimension(pq, dim, options.rank);
    });

    if (rep.condition_a == ConditionStatus::Holds || options.force_condition_b) {
        timed("central_projections", [&] {
            rep.projections = central_projections(center_of_commutant(pq, dim), p_set, q_set, options.rank);
        });
        rep.condition_b = rep.projections->rank_restricted.rank == rep.projections->rank_full.rank
                              ? ConditionStatus::Holds
                              : ConditionStatus::Fails;
    }

    const bool ok = rep.condition_a == ConditionStatus::Holds && rep.condition_b == ConditionStatus::Holds;
    rep.verdict = ok ? Verdict::Simulable : Verdict::NotSimulable;
    if (rep.condition_a == ConditionStatus::Fails) {
        rep.failure_witness = "condition A: dim ts(P) = " + std::to_string(rep.quadratic_p.dim) +
                              " but dim ts(P u Q) = " + std::to_string(rep.quadratic_pq.dim) +
                              "; Q breaks a quadratic symmetry of P";
    } else if (rep.condition_b == ConditionStatus::Fails) {
        rep.failure_witness = "condition B: rank T~ = " + std::to_string(rep.projections->rank_restricted.rank) +
                              " but rank T = " + std::to_string(rep.projections->rank_full.rank) +
                              "; Q has a central component not generated by P";
    }

    auto modular = [](const RankResult &r) { return r.method == RankMethod::Modular; };
    rep.monte_carlo = modular(rep.quadratic_p.rank) || modular(rep.quadratic_pq.rank) ||
                      modular(rep.linear_p.rank) || modular(rep.linear_pq.rank) ||
                      (rep.projections && (modular(rep.projections->rank_full) ||
                                           modular(rep.projections->rank_restricted)));
    return rep;
}

SimulabilityReport decide(const ProblemInstance &instance, const DecideOptions &options) {
    instance.validate();
    return decide_sets(instance.dim, instance.p_set, instance.q_set, options);
}

MutualReport decide_mutual(std::size_t dim, const std::vector<SparseMatrix> &p_set,
                           const std::vector<SparseMatrix> &q_set, const DecideOptions &options) {
    MutualReport out;
    out.p_simulates_q = decide_sets(dim, p_set, q_set, options);
    out.q_simulates_p = decide_sets(dim, q_set, p_set, options);
    const bool fwd = out.p_simulates_q.verdict == Verdict::Simulable;
    const bool bwd = out.q_simulates_p.verdict == Verdict::Simulable;
    if (fwd && bwd) {
        out.relation = MutualRelation::Equal;
    } else if (fwd) {
        out.relation = MutualRelation::PStrictlyLarger;
    } else if (bwd) {
        out.relation = MutualRelation::QStrictlyLarger;
    } else {
        out.relation = MutualRelation::Incomparable;
    }
    return out;
}

GaussianRational quadratic_invariant(const SparseMatrix &rho, const SparseMatrix &s) {
    if (!rho.is_square()) throw_error(ErrorCode::DimensionMismatch, "rho must be square");
    const std::size_t d = rho.nrows();
    if (s.nrows() != d * d || s.ncols() != d * d) {
        throw_error(ErrorCode::DimensionMismatch, "s must be " + std::to_string(d * d) + "x" + std::to_string(d * d));
    }
    if (rho.trace() != GaussianRational(1)) {
        throw_error(ErrorCode::NotUnitTrace, "Tr rho = " + rho.trace().to_string() + ", expected 1");
    }
    return (kron(rho, rho) * s).trace();
}

SparseMatrix qubit_permutation(std::size_t nqubits, const std::vector<std::size_t> &perm) {
    if (perm.size() != nqubits) throw_error(ErrorCode::BadArity, "permutation length differs from qubit count");
    std::vector<bool> hit(nqubits, false);
    for (auto p : perm) {
        if (p == 0 || p > nqubits || hit[p - 1]) throw_error(ErrorCode::InvalidArgument, "not a permutation");
        hit[p - 1] = true;
    }
    const std::size_t dim = std::size_t{1} << nqubits;
    std::vector<Triplet> t;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t out = 0;
        for (std::size_t k = 1; k <= nqubits; ++k) {
            if ((c >> (nqubits - k)) & 1U) out |= std::size_t{1} << (nqubits - perm[k - 1]);
        }
        t.push_back({out, c, GaussianRational(1)});
    }
    return SparseMatrix::from_triplets(dim, dim, t);
}

namespace {

GaussianRational concurrence_form(const SparseMatrix &psi) {
    if (psi.nrows() != 4 || psi.ncols() != 1) {
        throw_error(ErrorCode::DimensionMismatch, "expected a 4-component column vector");
    }
    const auto m13 = qubit_permutation(4, {3, 2, 1, 4});
    const auto m24 = qubit_permutation(4, {1, 4, 3, 2});
    const auto op = SparseMatrix::identity(16) - m13 - m24 + m13 * m24;
    const auto pp = kron(psi, psi);
    return (pp.adjoint() * op * pp).at(0, 0);
}

}  // namespace

GaussianRational concurrence_squared(const SparseMatrix &psi) {
    if (psi.nrows() == 4 && psi.ncols() == 1) {
        const auto n2 = (psi.adjoint() * psi).at(0, 0);
        if (n2 != GaussianRational(1)) {
            throw_error(ErrorCode::NotNormalized, "squared norm is " + n2.to_string() + ", expected 1");
        }
    }
    return concurrence_form(psi);
}

GaussianRational concurrence_squared_of_ray(const SparseMatrix &psi) {
    if (psi.nrows() != 4 || psi.ncols() != 1) {
        throw_error(ErrorCode::DimensionMismatch, "expected a 4-component column vector");
    }
    const auto n2 = (psi.adjoint() * psi).at(0, 0);
    if (n2.is_zero()) throw_error(ErrorCode::NotNormalized, "the zero vector has no ray");
    return concurrence_form(psi) / (n2 * n2);
}

}  // namespace qsym
