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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qsym/errors.hpp"
#include "qsym/instance.hpp"
#include "qsym/lie.hpp"
#include "qsym/pauli.hpp"
#include "test_support.hpp"

namespace qsym {
namespace {

using testing::gr;

SparseMatrix pauli(const char *text, std::size_t n) { return skewify(parse_pauli(text, n)); }

// Real dimension of the span of all nested commutators up to a fixed depth,
// computed without the closure code: a plain fixed-point over the whole
// basis, with real_span_rank as the independence test.
std::size_t naive_closure_dim(const std::vector<SparseMatrix> &gens) {
    std::vector<SparseMatrix> basis;
    auto try_add = [&](const SparseMatrix &m) {
        if (m.is_zero()) return false;
        auto with = basis;
        with.push_back(m);
        if (real_span_rank(with) > basis.size()) {
            basis.push_back(m);
            return true;
        }
        return false;
    };
    for (const auto &g : gens) try_add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = basis;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) grew |= try_add(commutator(snapshot[i], snapshot[j]));
    }
    return basis.size();
}

TEST(SkewCoordinates, LayoutAndInjectivity) {
    auto m = SparseMatrix::from_dense({{gr(0, 2), gr(1, 3)}, {gr(-1, 3), gr(0, -5)}});
    ASSERT_TRUE(m.is_skew_hermitian());
    auto c = skew_coordinates(m);
    std::vector<std::pair<std::size_t, Rational>> expect = {{0, 2}, {1, -5}, {2, 1}, {3, 3}};
    EXPECT_EQ(c, expect);
    EXPECT_TRUE(skew_coordinates(SparseMatrix(3, 3)).empty());
}

TEST(RationalEchelon, InsertAndContains) {
    RationalEchelon e(3);
    EXPECT_TRUE(e.insert({{0, 1}, {1, 2}}));
    EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}));
    EXPECT_FALSE(e.insert({{0, 2}, {1, 5}, {2, 1}}));  // 2*r1 + r2
    EXPECT_EQ(e.rank(), 2u);
    EXPECT_TRUE(e.contains({{0, -1}, {1, -1}, {2, 1}}));
    EXPECT_FALSE(e.contains({{2, 1}}));
    EXPECT_FALSE(e.insert({}));
}

TEST(LieClosure, SingleQubit) {
    auto x = pauli("X1", 1), y = pauli("Y1", 1), z = pauli("Z1", 1);
    EXPECT_EQ(lie_closure({x}, 2).dim, 1u);
    EXPECT_EQ(lie_closure({x, z}, 2).dim, 3u);
    EXPECT_EQ(lie_closure({x, y, z, GaussianRational::i() * SparseMatrix::identity(2)}, 2).dim, 4u);
    auto b = lie_closure({x, z}, 2);
    EXPECT_EQ(b.seed_count, 2u);
    EXPECT_EQ(b.generation_depth, 1u);
    for (const auto &m : b.basis) EXPECT_TRUE(m.is_skew_hermitian());
}

TEST(LieClosure, DependentGeneratorsAreSkipped) {
    auto x = pauli("X1", 1);
    auto b = lie_closure({x, 2 * x, SparseMatrix(2, 2)}, 2);
    EXPECT_EQ(b.dim, 1u);
    EXPECT_EQ(b.seed_count, 1u);
}

TEST(LieClosure, MatchesNaiveFixedPoint) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<SparseMatrix> gens;
        for (std::size_t k = 0; k < 1 + trial % 3; ++k)
            gens.push_back(testing::random_skew_hermitian(rng, 2 + trial % 2, 0.4));
        EXPECT_EQ(lie_closure(gens, gens[0].nrows()).dim, naive_closure_dim(gens)) << "trial " << trial;
    }
}

TEST(LieClosure, IsClosedUnderBrackets) {
    auto inst = example_fixture("ex2a");
    auto b = lie_closure(inst.union_set(), 4);
    RationalEchelon span(16);
    for (const auto &m : b.basis) span.insert(skew_coordinates(m));
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = i + 1; j < b.dim; ++j) EXPECT_TRUE(span.contains(skew_coordinates(commutator(b.basis[i], b.basis[j]))));
}

TEST(LieClosure, OrderIndependentDimension) {
    auto gens = example_fixture("ex1").union_set();
    const std::size_t dim = lie_closure(gens, 4).dim;
    std::sort(gens.begin(), gens.end(), [](const SparseMatrix &a, const SparseMatrix &b) {
        return a.to_string() < b.to_string();
    });
    do {
        EXPECT_EQ(lie_closure(gens, 4).dim, dim);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const SparseMatrix &a, const SparseMatrix &b) {
        return a.to_string() < b.to_string();
    }));
}

TEST(LieClosure, Errors) {
    try {
        lie_closure({SparseMatrix::identity(2)}, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSkewHermitian);
    }
    try {
        lie_closure({pauli("X1", 1)}, 4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    try {
        lie_closure({pauli("X1", 1), pauli("Z1", 1)}, 2, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}

TEST(Decompose, ReductiveSplitting) {
    auto x = pauli("X1", 1), z = pauli("Z1", 1);
    auto i1 = GaussianRational::i() * SparseMatrix::identity(2);
    auto d = decompose(lie_closure({x, z, i1}, 2));
    EXPECT_EQ(d.semisimple_dim, 3u);
    EXPECT_EQ(d.center_dim, 1u);
    ASSERT_EQ(d.center_basis.size(), 1u);
    EXPECT_TRUE(in_complex_span(d.center_basis[0], {i1}));
    auto abelian = decompose(lie_closure({pauli("Z1", 2), pauli("Z2", 2)}, 4));
    EXPECT_EQ(abelian.semisimple_dim, 0u);
    EXPECT_EQ(abelian.center_dim, 2u);
}

TEST(Decompose, ExampleTwoAlgebras) {
    auto a = example_fixture("ex2a");
    auto dp = decompose(lie_closure(a.p_set, 4));
    EXPECT_EQ(dp.semisimple_dim, 3u);
    EXPECT_EQ(dp.center_dim, 1u);
    auto dpq = decompose(lie_closure(a.union_set(), 4));
    EXPECT_EQ(dpq.semisimple_dim, 3u);
    EXPECT_EQ(dpq.center_dim, 2u);
}

TEST(Decompose, NotClosedBasisIsRejected) {
    LieBasis fake;
    fake.basis = {pauli("X1", 1), pauli("Z1", 1)};
    fake.dim = 2;
    fake.seed_count = 2;
    try {
        decompose(fake);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotClosed);
    }
}

// Derived-algebra elements are Hilbert-Schmidt orthogonal to the center of
// the commutant.
TEST(Decompose, DerivedAlgebraOrthogonalToCenter) {
    std::vector<ProblemInstance> fixtures = {example_fixture("ex1"), example_fixture("ex2a"), example_fixture("ex2b"),
                                             central_spin_instance(2, central_spin_couplings(2, 'a')),
                                             central_spin_instance(3, central_spin_couplings(3, 'b'))};
    for (const auto &inst : fixtures) {
        for (const auto &set : {inst.p_set, inst.union_set()}) {
            auto center = center_of_commutant(set, inst.dim);
            auto d = decompose(lie_closure(set, inst.dim));
            for (const auto &c : center)
                for (const auto &b : d.derived_basis) EXPECT_TRUE(hs_inner(c, b).is_zero());
        }
    }
}

TEST(Oracle, ExampleVerdicts) {
    auto r1 = oracle_verdict(example_fixture("ex1"));
    EXPECT_EQ(r1.verdict, Verdict::NotSimulable);
    EXPECT_EQ(r1.closure_dim_p, 6u);
    EXPECT_EQ(r1.closure_dim_pq, 15u);
    auto ra = oracle_verdict(example_fixture("ex2a"));
    EXPECT_EQ(ra.verdict, Verdict::NotSimulable);
    EXPECT_EQ(ra.closure_dim_p, 4u);
    EXPECT_EQ(ra.closure_dim_pq, 5u);
    EXPECT_EQ(oracle_verdict(example_fixture("ex2b")).verdict, Verdict::Simulable);
}

TEST(Oracle, CentralSpinSmallRows) {
    auto a2 = central_spin_instance(2, central_spin_couplings(2, 'a'));
    auto r = oracle_verdict(a2);
    EXPECT_EQ(r.closure_dim_p, 15u);
    EXPECT_EQ(r.verdict, Verdict::Simulable);
    auto b3 = central_spin_instance(3, central_spin_couplings(3, 'b'));
    EXPECT_EQ(oracle_verdict(b3).closure_dim_p, 63u);
}

}  // namespace
}  // namespace qsym
