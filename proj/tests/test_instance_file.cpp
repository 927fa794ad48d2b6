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

#include <random>

#include "qsym/errors.hpp"
#include "qsym/instance_file.hpp"
#include "test_support.hpp"

namespace qsym {
namespace {

using testing::gr;

void expect_parse_error(const std::string &text, std::size_t line, std::size_t column) {
    try {
        parse_instance_file(text);
        FAIL() << "expected a parse error for:\n" << text;
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), line) << text << "\n" << e.what();
        EXPECT_EQ(e.column(), column) << text << "\n" << e.what();
    }
}

TEST(InstanceFile, ParsesQubitMode) {
    auto f = parse_instance_file(
        "# Example\n"
        "system: qubits 2\n"
        "P: dipole = 2*Z1*Z2 - X1*X2 - Y1*Y2; X1 - Y1 + X2 - Y2  # trailing comment\n"
        "\n"
        "Q: X1*X2 + Y1*Y2 + Z1*Z2\n");
    EXPECT_EQ(f.mode, InstanceMode::Qubits);
    EXPECT_EQ(f.size, 2u);
    EXPECT_EQ(f.dim(), 4u);
    ASSERT_EQ(f.p.size(), 2u);
    ASSERT_EQ(f.q.size(), 1u);
    EXPECT_EQ(f.p[0].label, "dipole");
    EXPECT_EQ(f.p[1].label, "P2");
    EXPECT_EQ(f.q[0].label, "Q1");
    auto inst = f.to_problem();
    auto fixture = example_fixture("ex2a");
    EXPECT_EQ(inst.p_set, fixture.p_set);
    EXPECT_EQ(inst.q_set, fixture.q_set);
}

TEST(InstanceFile, ParsesMatrixModeAndMultipliesByI) {
    auto f = parse_instance_file("system: dim 2\nP: h = [[0, 1-i], [1+i, 1/2]]\r\n");
    EXPECT_EQ(f.mode, InstanceMode::Matrix);
    EXPECT_EQ(f.dim(), 2u);
    auto inst = f.to_problem();
    auto h = SparseMatrix::from_dense({{gr(0), gr(1, -1)}, {gr(1, 1), GaussianRational(Rational(1, 2))}});
    EXPECT_EQ(inst.p_set[0], GaussianRational::i() * h);
    EXPECT_TRUE(inst.q_set.empty());
}

TEST(InstanceFile, RepeatedLinesAppend) {
    auto f = parse_instance_file("system: qubits 1\nP: X1\nP: Z1\nQ: Y1\nQ: a = Y1 + Z1\n");
    EXPECT_EQ(f.p.size(), 2u);
    EXPECT_EQ(f.q.size(), 2u);
    EXPECT_EQ(f.p[1].label, "P2");
    EXPECT_EQ(f.q[1].label, "a");
}

TEST(InstanceFile, NonHermitianMatrixIsRejectedDownstream) {
    auto f = parse_instance_file("system: dim 2\nP: [[0, 1], [0, 0]]\n");
    try {
        f.to_problem();
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSkewHermitian);
    }
}

TEST(InstanceFile, ErrorsCarryLineAndColumn) {
    expect_parse_error("system: qubits 2\nP: X1\nQ: Z1 * * Z2\n", 3, 9);
    expect_parse_error("P: X1\nsystem: qubits 1\n", 1, 1);
    expect_parse_error("system: qubits 2\nR: X1\n", 2, 1);
    expect_parse_error("system: qubits 0\n", 1, 16);
    expect_parse_error("system: qubits 17\n", 1, 16);
    expect_parse_error("system: banana 2\n", 1, 9);
    expect_parse_error("system: qubits 1\nsystem: qubits 1\n", 2, 1);
    expect_parse_error("system: qubits 1\nP: X1;; Z1\n", 2, 7);
    expect_parse_error("system: qubits 1\nP: a = X1; a = Z1\n", 2, 12);
    expect_parse_error("system: qubits 1\nP: 1a = X1\n", 2, 4);
    expect_parse_error("system: qubits 1\nP: a =\n", 2, 7);
    expect_parse_error("# nothing here\n", 2, 1);
    expect_parse_error("system: dim 2\nP: [[1, 0], [0]]\n", 2, 15);
    expect_parse_error("system: dim 2\nP: [[1, 0], [0, 1], [1, 1]]\n", 2, 20);
    expect_parse_error("system: dim 2\nP: [[1, 0], [0, 1+]]\n", 2, 19);
}

TEST(InstanceFile, QubitIndexOutOfRange) {
    try {
        parse_instance_file("system: qubits 2\nP: X3\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(InstanceFile, CanonicalTextRoundTrip) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        InstanceFile f;
        if (trial % 2 == 0) {
            f.mode = InstanceMode::Qubits;
            f.size = 1 + trial % 3;
            for (int k = 0; k < 1 + trial % 3; ++k)
                f.p.push_back({"g" + std::to_string(k), testing::random_pauli_polynomial(rng, f.size, 4), std::nullopt});
            f.q.push_back({"target", testing::random_pauli_polynomial(rng, f.size, 2), std::nullopt});
        } else {
            f.mode = InstanceMode::Matrix;
            f.size = 1 + trial % 4;
            auto h = GaussianRational(Rational(0), Rational(-1)) * testing::random_skew_hermitian(rng, f.size);
            f.p.push_back({"h", std::nullopt, h});
        }
        auto text = f.to_text();
        EXPECT_EQ(parse_instance_file(text), f) << text;
        EXPECT_EQ(parse_instance_file(text).to_text(), text);
    }
}

TEST(InstanceFile, GeneratedModelsAreFixedPoints) {
    for (const char *name : {"ex1", "ex2a", "ex2b"}) {
        auto f = instance_file_from_model(example_model(name));
        auto text = f.to_text();
        auto again = parse_instance_file(text);
        EXPECT_EQ(again, f);
        EXPECT_EQ(again.to_text(), text);
        EXPECT_EQ(again.to_problem().p_set, example_fixture(name).p_set);
    }
    auto cs = instance_file_from_model(central_spin_model(3, central_spin_couplings(3, 'b')));
    EXPECT_EQ(parse_instance_file(cs.to_text()), cs);
    EXPECT_NE(cs.to_text().find("H1 = "), std::string::npos);
}

TEST(InstanceFile, MatrixLiteral) {
    auto m = SparseMatrix::from_dense({{gr(0), GaussianRational(Rational(1, 2), Rational(-3))}, {gr(0, 1), gr(-2)}});
    EXPECT_EQ(matrix_literal(m), "[[0, 1/2-3*i], [i, -2]]");
}

TEST(InstanceFile, LoadMissingFileIsIo) {
    try {
        load_instance_file("/nonexistent/path/x.qsym");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

}  // namespace
}  // namespace qsym
