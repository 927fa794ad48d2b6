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

#include "qsym/instance.hpp"

#include "qsym/errors.hpp"

namespace qsym {

void ProblemInstance::validate() const {
    if (p_set.empty()) throw_error(ErrorCode::InvalidArgument, "the generator set P must not be empty");
    auto check = [&](const std::vector<SparseMatrix> &set, const char *name) {
        for (std::size_t k = 0; k < set.size(); ++k) {
            const auto &m = set[k];
            if (m.nrows() != dim || m.ncols() != dim) {
                throw_error(ErrorCode::DimensionMismatch, std::string(name) + "[" + std::to_string(k + 1) +
                                                              "] is not " + std::to_string(dim) + "x" +
                                                              std::to_string(dim));
            }
            if (!m.is_skew_hermitian()) {
                throw_error(ErrorCode::NotSkewHermitian,
                            std::string(name) + "[" + std::to_string(k + 1) + "] is not skew-Hermitian");
            }
        }
    };
    check(p_set, "P");
    check(q_set, "Q");
}

std::vector<SparseMatrix> ProblemInstance::union_set() const {
    std::vector<SparseMatrix> all = p_set;
    all.insert(all.end(), q_set.begin(), q_set.end());
    return all;
}

ProblemInstance PauliModel::instance() const {
    ProblemInstance inst;
    inst.dim = std::size_t{1} << nqubits;
    for (const auto &g : p) {
        inst.p_set.push_back(skewify(g.hamiltonian));
        inst.p_labels.push_back(g.label);
    }
    for (const auto &g : q) {
        inst.q_set.push_back(skewify(g.hamiltonian));
        inst.q_labels.push_back(g.label);
    }
    return inst;
}

std::vector<Rational> central_spin_couplings(std::size_t n, char which_case) {
    if (n < 2) throw_error(ErrorCode::BadArity, "the central-spin model needs at least two spins");
    std::vector<Rational> j;
    for (std::size_t k = 2; k <= n; ++k) {
        if (which_case == 'a') {
            j.emplace_back(1);
        } else if (which_case == 'b') {
            j.emplace_back(k % 2 == 0 ? 2 : 1);
        } else {
            throw_error(ErrorCode::InvalidArgument, std::string("unknown central-spin case '") + which_case + "'");
        }
    }
    return j;
}

PauliModel central_spin_model(std::size_t n, const std::vector<Rational> &couplings) {
    if (n < 2) throw_error(ErrorCode::BadArity, "the central-spin model needs at least two spins");
    if (couplings.size() != n - 1) {
        throw_error(ErrorCode::BadArity, "expected " + std::to_string(n - 1) + " couplings J_2..J_n, got " +
                                             std::to_string(couplings.size()));
    }
    std::vector<PauliTerm> drift{{Rational(1), {{1, PauliOp::X}}}};
    for (std::size_t k = 2; k <= n; ++k) {
        const Rational &jk = couplings[k - 2];
        for (PauliOp op : {PauliOp::X, PauliOp::Y, PauliOp::Z}) drift.push_back({jk, {{1, op}, {k, op}}});
    }
    PauliModel m;
    m.nqubits = n;
    m.p.push_back({"H1", PauliPolynomial(n, std::move(drift))});
    m.p.push_back({"H2", PauliPolynomial::single(n, 1, {{1, PauliOp::Z}})});
    m.q.push_back({"X1", PauliPolynomial::single(n, 1, {{1, PauliOp::X}})});
    return m;
}

ProblemInstance central_spin_instance(std::size_t n, const std::vector<Rational> &couplings) {
    return central_spin_model(n, couplings).instance();
}

PauliModel example_model(const std::string &name) {
    PauliModel m;
    m.nqubits = 2;
    auto poly = [](const char *text) { return parse_pauli(text, 2); };
    if (name == "ex1") {
        m.p = {{"X1", poly("X1")}, {"Y1", poly("Y1")}, {"X2", poly("X2")}, {"Y2", poly("Y2")}};
        m.q = {{"Hzz", poly("Z1*Z2")}};
    } else if (name == "ex2a" || name == "ex2b") {
        m.p = {{"dipole", poly("2*Z1*Z2 - X1*X2 - Y1*Y2")}, {"field", poly("X1 - Y1 + X2 - Y2")}};
        if (name == "ex2a") {
            m.q = {{"heisenberg", poly("X1*X2 + Y1*Y2 + Z1*Z2")}};
        } else {
            m.q = {{"pairing", poly("X1*Z2 + Z1*X2 + Y1*Z2 + Z1*Y2")}};
        }
    } else {
        throw_error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "' (expected ex1, ex2a or ex2b)");
    }
    return m;
}

ProblemInstance example_fixture(const std::string &name) { return example_model(name).instance(); }

}  // namespace qsym
