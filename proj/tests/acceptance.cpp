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

// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if a
// blocking criterion fails. The n = 5, 6 central-spin rows are a stretch
// goal; each runs in a child process with a wall-clock and memory cap and
// never affects the exit status.
//
//   qsym_acceptance [--stretch-seconds S] [--stretch-memory-mb M] [--no-stretch]

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/errors.hpp"
#include "qsym/instance.hpp"
#include "qsym/lie.hpp"
#include "qsym/linalg.hpp"
#include "qsym/report.hpp"
#include "qsym/symmetry.hpp"
#include "test_support.hpp"

namespace {

using namespace qsym;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects violations for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string &what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    template <class A, class B>
    void equal(const A &got, const B &want, const std::string &what) {
        std::ostringstream s;
        s << what << ": got " << got << ", expected " << want;
        expect(got == want, s.str());
    }
};

bool g_blocking_failed = false;

void emit(int id, const std::string &title, const Check &c, double secs, bool blocking = true,
          const std::string &note = "") {
    const bool pass = c.failures.empty();
    if (!pass && blocking) g_blocking_failed = true;
    std::printf("criterion %d: %s  %s  (%zu checks, %.2f s)%s%s\n", id, pass ? "PASS" : "FAIL", title.c_str(),
                c.checks, secs, blocking ? "" : "  [stretch, non-blocking]", note.empty() ? "" : ("  " + note).c_str());
    for (std::size_t k = 0; k < c.failures.size() && k < 20; ++k) std::printf("    - %s\n", c.failures[k].c_str());
    if (c.failures.size() > 20) std::printf("    - ... %zu more\n", c.failures.size() - 20);
    std::fflush(stdout);
}

// Runs fn, turning exceptions into a recorded failure.
void guarded(Check &c, const std::string &what, const std::function<void()> &fn) {
    try {
        fn();
    } catch (const std::exception &e) {
        c.expect(false, what + ": " + e.what());
    }
}

ProblemInstance central_spin(std::size_t n, char which) {
    return central_spin_instance(n, central_spin_couplings(n, which));
}

DecideOptions exact_options() {
    DecideOptions o;
    o.rank.mode = RankMode::Exact;
    return o;
}

SparseMatrix skew_pauli(const char *text, std::size_t n) { return skewify(parse_pauli(text, n)); }

// All fixtures used by the invariant and determinism checks.
struct NamedInstance {
    std::string name;
    ProblemInstance inst;
    InstanceFile file;
};

std::vector<NamedInstance> fixtures(std::size_t max_central_spin) {
    std::vector<NamedInstance> out;
    for (const char *name : {"ex1", "ex2a", "ex2b"}) {
        auto model = example_model(name);
        out.push_back({name, model.instance(), instance_file_from_model(model)});
    }
    for (std::size_t n = 2; n <= max_central_spin; ++n) {
        for (char c : {'a', 'b'}) {
            auto model = central_spin_model(n, central_spin_couplings(n, c));
            out.push_back({"central-spin n=" + std::to_string(n) + " case " + c, model.instance(),
                           instance_file_from_model(model)});
        }
    }
    return out;
}

// Condition (A) => equal linear dims, accumulated over every decide call.
Check g_condition_a_linear;

void record_condition_a(const std::string &name, const SimulabilityReport &r) {
    if (r.condition_a == ConditionStatus::Holds) {
        g_condition_a_linear.expect(r.linear_p.dim == r.linear_pq.dim,
                                    name + ": condition A holds but linear dims " + std::to_string(r.linear_p.dim) +
                                        " != " + std::to_string(r.linear_pq.dim));
    } else {
        ++g_condition_a_linear.checks;
    }
}

void criterion1() {
    Check c;
    auto t0 = Clock::now();
    guarded(c, "example 1", [&] {
        auto r = decide(example_fixture("ex1"), exact_options());
        record_condition_a("ex1", r);
        c.equal(r.quadratic_p.dim, 4u, "dim ts(P)");
        c.equal(r.quadratic_pq.dim, 2u, "dim ts(P u {iZ1Z2})");
        c.equal(r.linear_p.dim, 1u, "dim P'");
        c.equal(r.linear_pq.dim, 1u, "dim (P u Q)'");
        c.equal(std::string(verdict_name(r.verdict)), std::string("not_simulable"), "verdict");
    });
    double secs = since(t0);
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s exceeds 1 s");
    emit(1, "Example 1: ts dims 4/2, linear dims 1/1, not simulable", c, secs);
}

void criterion2() {
    Check c;
    auto t0 = Clock::now();
    guarded(c, "example 2", [&] {
        auto a = example_fixture("ex2a");
        auto b = example_fixture("ex2b");
        const std::vector<std::pair<std::string, std::vector<SparseMatrix>>> sets = {
            {"P", a.p_set}, {"P u Q_a", a.union_set()}, {"P u Q_b", b.union_set()}};
        for (const auto &[name, set] : sets) {
            c.equal(commutant_dimension(set, 4, RankOptions{RankMode::Exact}).dim, 3u, "linear dim of " + name);
            c.equal(quadratic_commutant_dimension(set, 4, RankOptions{RankMode::Exact}).dim, 16u,
                    "quadratic dim of " + name);
        }
        auto ra = decide(a, exact_options());
        auto rb = decide(b, exact_options());
        record_condition_a("ex2a", ra);
        record_condition_a("ex2b", rb);
        c.expect(ra.projections.has_value() && rb.projections.has_value(), "central projections were evaluated");
        if (ra.projections && rb.projections) {
            c.equal(ra.projections->center_basis.size(), 3u, "center dim");
            c.equal(ra.projections->rank_restricted.rank, 1u, "rank T~");
            c.equal(ra.projections->rank_full.rank, 2u, "rank T_a");
            c.equal(rb.projections->rank_full.rank, 1u, "rank T_b");
        }
        c.equal(std::string(verdict_name(ra.verdict)), std::string("not_simulable"), "Q_a verdict");
        c.equal(std::string(verdict_name(rb.verdict)), std::string("simulable"), "Q_b verdict");
    });
    double secs = since(t0);
    c.expect(secs < 5.0, "runtime " + std::to_string(secs) + " s exceeds 5 s");
    emit(2, "Example 2: linear 3, quadratic 16, center 3, ranks T~=1, T_a=2, T_b=1", c, secs);
}

void criterion3() {
    struct Row {
        std::size_t n;
        char which;
        std::size_t lie, quad, lin;
    };
    const Row rows[] = {{2, 'a', 15, 2, 1}, {3, 'a', 38, 8, 2}, {4, 'a', 78, 50, 5},
                        {2, 'b', 15, 2, 1}, {3, 'b', 63, 2, 1}, {4, 'b', 158, 8, 2}};
    Check c;
    auto t0 = Clock::now();
    std::ostringstream timing;
    for (const auto &row : rows) {
        const std::string tag = "n=" + std::to_string(row.n) + row.which;
        auto r0 = Clock::now();
        guarded(c, tag, [&] {
            auto inst = central_spin(row.n, row.which);
            auto lie = lie_closure(inst.p_set, inst.dim);
            c.equal(lie.dim, row.lie, tag + " Lie dim");
            DecideOptions opts;  // auto mode
            opts.force_condition_b = true;
            auto r = decide(inst, opts);
            record_condition_a(tag, r);
            c.equal(r.quadratic_p.dim, row.quad, tag + " quadratic dim");
            c.equal(r.linear_p.dim, row.lin, tag + " linear dim");
            c.expect(r.projections.has_value(), tag + " central projections evaluated");
            if (r.projections) {
                c.equal(r.projections->rank_restricted.rank, 0u, tag + " rank T~");
                c.equal(r.projections->rank_full.rank, 0u, tag + " rank T");
            }
            c.equal(std::string(verdict_name(r.verdict)), std::string("simulable"), tag + " verdict");
            auto o = oracle_verdict(inst);
            c.expect(o.verdict == r.verdict, tag + " oracle disagrees");
            c.equal(o.closure_dim_p, row.lie, tag + " oracle dim <P>");
        });
        double secs = since(r0);
        timing << tag << " " << std::fixed;
        timing.precision(1);
        timing << secs << "s ";
        c.expect(secs < (row.n <= 3 ? 120.0 : 1800.0), tag + " runtime " + std::to_string(secs) + " s over target");
    }
    emit(3, "central-spin rows n=2,3,4 (both cases) with oracle agreement", c, since(t0), true, timing.str());
}

// Runs fn in a child process under a wall-clock and address-space cap.
// Returns the child's single output line, or a description of how it died.
struct ChildResult {
    bool ok = false;
    std::string output;
};

ChildResult run_capped(const std::function<std::string()> &fn, unsigned seconds, std::size_t memory_mb) {
    int fds[2];
    if (pipe(fds) != 0) return {false, "pipe failed"};
    std::fflush(stdout);
    pid_t pid = fork();
    if (pid < 0) return {false, "fork failed"};
    if (pid == 0) {
        close(fds[0]);
        rlimit lim{};
        lim.rlim_cur = lim.rlim_max = static_cast<rlim_t>(memory_mb) << 20;
        setrlimit(RLIMIT_AS, &lim);
        alarm(seconds);
        std::string out;
        int code = 0;
        try {
            out = fn();
        } catch (const std::bad_alloc &) {
            out = "out of memory (cap " + std::to_string(memory_mb) + " MB)";
            code = 2;
        } catch (const std::exception &e) {
            out = e.what();
            code = 2;
        }
        (void)!write(fds[1], out.data(), out.size());
        close(fds[1]);
        _exit(code);
    }
    close(fds[1]);
    std::string out;
    char buf[512];
    ssize_t got;
    while ((got = read(fds[0], buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(got));
    close(fds[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    if (WIFSIGNALED(status)) {
        int sig = WTERMSIG(status);
        return {false, sig == SIGALRM ? "no result within " + std::to_string(seconds) + " s"
                                      : std::string("killed by signal ") + strsignal(sig)};
    }
    return {WIFEXITED(status) && WEXITSTATUS(status) == 0, out};
}

void criterion4(bool enabled, unsigned seconds, std::size_t memory_mb) {
    Check c;
    auto t0 = Clock::now();
    if (!enabled) {
        c.expect(false, "not run (--no-stretch)");
        emit(4, "central-spin rows n=5,6 quadratic dims via modular mode", c, 0, false);
        return;
    }
    struct Row {
        std::size_t n;
        char which;
        std::size_t quad;
    };
    const Row rows[] = {{5, 'a', 392}, {5, 'b', 32}, {6, 'b', 200}, {6, 'a', 3528}};
    std::ostringstream notes;
    for (const auto &row : rows) {
        const std::string tag = "n=" + std::to_string(row.n) + row.which;
        auto r0 = Clock::now();
        auto res = run_capped(
            [&] {
                auto inst = central_spin(row.n, row.which);
                auto d = quadratic_commutant_dimension(inst.p_set, inst.dim, RankOptions{RankMode::Modular});
                return std::to_string(d.dim);
            },
            seconds, memory_mb);
        double secs = since(r0);
        notes << tag << " " << std::fixed;
        notes.precision(0);
        notes << secs << "s ";
        if (!res.ok) {
            c.expect(false, tag + ": " + res.output);
            continue;
        }
        c.equal(res.output, std::to_string(row.quad), tag + " quadratic dim");
    }
    emit(4, "central-spin rows n=5,6 quadratic dims via modular mode", c, since(t0), false, notes.str());
}

// A random Hermitian two-qubit Pauli polynomial, times i.
SparseMatrix random_generator(std::mt19937_64 &rng) {
    return skewify(testing::random_pauli_polynomial(rng, 2, 1 + rng() % 3));
}

void criterion5() {
    Check c;
    auto t0 = Clock::now();
    std::mt19937_64 rng(20260517);
    std::size_t simulable = 0;
    const std::size_t trials = 200;
    for (std::size_t t = 0; t < trials; ++t) {
        ProblemInstance inst;
        inst.dim = 4;
        std::uniform_int_distribution<std::size_t> count(1, 4);
        const std::size_t np = count(rng), nq = count(rng);
        for (std::size_t k = 0; k < np; ++k) {
            inst.p_set.push_back(random_generator(rng));
            inst.p_labels.push_back("P" + std::to_string(k + 1));
        }
        for (std::size_t k = 0; k < nq; ++k) {
            // Every third target is a real combination of P elements and
            // their brackets, so the simulable side is well represented.
            if (t % 3 == 0) {
                auto m = inst.p_set[rng() % np];
                if (np > 1) m = m + commutator(inst.p_set[0], inst.p_set[np - 1]);
                inst.q_set.push_back(m);
            } else {
                inst.q_set.push_back(random_generator(rng));
            }
            inst.q_labels.push_back("Q" + std::to_string(k + 1));
        }
        const std::string tag = "instance " + std::to_string(t);
        guarded(c, tag, [&] {
            auto r = decide(inst);
            record_condition_a(tag, r);
            auto o = oracle_verdict(inst);
            c.expect(r.verdict == o.verdict, tag + ": engine " + verdict_name(r.verdict) + ", oracle " +
                                                 verdict_name(o.verdict) + " (dims " +
                                                 std::to_string(o.closure_dim_p) + "/" +
                                                 std::to_string(o.closure_dim_pq) + ")");
            if (o.verdict == Verdict::Simulable) ++simulable;
        });
    }
    emit(5, "engine verdict equals Lie-closure oracle on 200 random two-qubit instances", c, since(t0), true,
         std::to_string(simulable) + " simulable / " + std::to_string(trials - simulable) + " not");
}

void criterion6() {
    Check c;
    auto t0 = Clock::now();
    std::mt19937_64 rng(6);

    // (a) vec(AXB) = (B^t (x) A) vec(X).
    for (int t = 0; t < 100; ++t) {
        auto a = testing::random_matrix(rng, 3, 3, 0.7);
        auto x = testing::random_matrix(rng, 3, 3, 0.7);
        auto b = testing::random_matrix(rng, 3, 3, 0.7);
        c.expect(vec(a * x * b) == kron(b.transpose(), a) * vec(x), "(a) Sylvester identity, case " + std::to_string(t));
    }

    // (d) [D(M1), D(M2)] = D([M1, M2]).
    for (int t = 0; t < 50; ++t) {
        auto m1 = testing::random_matrix(rng, 2, 2, 0.8);
        auto m2 = testing::random_matrix(rng, 2, 2, 0.8);
        c.expect(commutator(constraint_operator(m1), constraint_operator(m2)) == constraint_operator(commutator(m1, m2)),
                 "(d) D homomorphism, case " + std::to_string(t));
    }

    for (const auto &f : fixtures(3)) {
        const std::size_t d = f.inst.dim;
        const std::vector<std::pair<std::string, std::vector<SparseMatrix>>> sets = {{"P", f.inst.p_set},
                                                                                     {"P u Q", f.inst.union_set()}};
        for (const auto &[set_name, set] : sets) {
            const std::string tag = f.name + " " + set_name;
            guarded(c, tag, [&] {
                auto ts = quadratic_commutant(set, d);
                // (b) identity and swap.
                c.expect(in_complex_span(SparseMatrix::identity(d * d), ts.basis), "(b) 1 in ts, " + tag);
                c.expect(in_complex_span(swap_matrix(d), ts.basis), "(b) K in ts, " + tag);
                // (c) linear symmetries embed as S (x) 1, 1 (x) S and S (x) S.
                for (const auto &s : commutant(set, d).basis) {
                    c.expect(in_complex_span(kron(s, SparseMatrix::identity(d)), ts.basis), "(c) S(x)1, " + tag);
                    c.expect(in_complex_span(kron(SparseMatrix::identity(d), s), ts.basis), "(c) 1(x)S, " + tag);
                    c.expect(in_complex_span(kron(s, s), ts.basis), "(c) S(x)S, " + tag);
                }
            });
        }
    }

    // (e) Tr(C^dagger b) = 0 for the center C of the commutant and the
    // derived algebra of the closure.
    for (const auto &f : fixtures(4)) {
        const std::vector<std::pair<std::string, std::vector<SparseMatrix>>> sets = {{"P", f.inst.p_set},
                                                                                     {"P u Q", f.inst.union_set()}};
        for (const auto &[set_name, set] : sets) {
            const std::string tag = f.name + " " + set_name;
            guarded(c, tag, [&] {
                auto center = center_of_commutant(set, f.inst.dim);
                auto dec = decompose(lie_closure(set, f.inst.dim));
                for (const auto &ca : center)
                    for (const auto &b : dec.derived_basis)
                        c.expect(hs_inner(ca, b).is_zero(), "(e) trace orthogonality, " + tag);
            });
        }
        // Every fixture also feeds (f).
        guarded(c, f.name, [&] { record_condition_a(f.name, decide(f.inst)); });
    }

    // (f) accumulated over criteria 1-3, 5 and the fixtures above.
    c.checks += g_condition_a_linear.checks;
    for (const auto &v : g_condition_a_linear.failures) c.failures.push_back("(f) " + v);
    emit(6, "invariants (a)-(f): Sylvester, 1 and K in ts, embedding, D homomorphism, trace orthogonality, A => "
            "equal linear dims",
         c, since(t0));
}

void criterion7() {
    Check c;
    auto t0 = Clock::now();
    using testing::gr;
    guarded(c, "concurrence", [&] {
        auto zero_zero = SparseMatrix::column({gr(1), gr(0), gr(0), gr(0)});
        c.expect(concurrence_squared(zero_zero) == gr(0), "concurrence^2 of |00> is not 0");
        const GaussianRational half(Rational(1, 2));
        auto bell = SparseMatrix::column({half * gr(1, 1), gr(0), gr(0), half * gr(1, -1)});
        c.expect(concurrence_squared(bell) == gr(1), "concurrence^2 of a Bell state is not 1");
        c.expect(concurrence_squared_of_ray(SparseMatrix::column({gr(1), gr(0), gr(0), gr(1)})) == gr(1),
                 "concurrence^2 of |00> + |11> is not 1");
    });
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t d = 2 + t % 3;
        auto a = testing::random_matrix(rng, d, d, 0.7);
        if (a.is_zero()) a = SparseMatrix::identity(d);
        auto rho = a * a.adjoint();
        rho = rho.trace().inverse() * rho;
        guarded(c, "purity " + std::to_string(t), [&] {
            c.expect(quadratic_invariant(rho, swap_matrix(d)) == (rho * rho).trace(),
                     "Tr[(rho (x) rho) K] != Tr rho^2, case " + std::to_string(t));
        });
    }
    emit(7, "concurrence: |00> -> 0, Bell -> 1; purity Tr[(rho(x)rho)K] = Tr rho^2 on 50 states", c, since(t0));
}

void criterion8() {
    Check c;
    auto t0 = Clock::now();
    RunOptions opts;
    opts.decide.rank.mode = RankMode::Exact;
    for (const auto &f : fixtures(4)) {
        guarded(c, f.name, [&] {
            std::string first = report_to_json(run_decide(f.file, opts));
            for (int rep = 0; rep < 2; ++rep)
                c.expect(report_to_json(run_decide(f.file, opts)) == first, f.name + ": decide report differs");
            if (f.inst.dim <= 8) {
                auto closure = report_to_json(run_closure(f.file, opts));
                c.expect(report_to_json(run_closure(f.file, opts)) == closure, f.name + ": closure report differs");
                for (auto what : {SymmetryRequest::Linear, SymmetryRequest::Quadratic, SymmetryRequest::Center}) {
                    auto s = report_to_json(run_symmetries(f.file, what, GeneratorSet::PQ, opts));
                    c.expect(report_to_json(run_symmetries(f.file, what, GeneratorSet::PQ, opts)) == s,
                             f.name + ": symmetries report differs");
                }
            }
        });
    }
    emit(8, "repeated exact-mode runs give byte-identical JSON reports on every fixture", c, since(t0));
}

}  // namespace

int main(int argc, char **argv) {
    bool stretch = true;
    unsigned stretch_seconds = 7200;
    std::size_t stretch_mb = 4500;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--no-stretch") {
            stretch = false;
        } else if (arg == "--stretch-seconds" && k + 1 < argc) {
            stretch_seconds = static_cast<unsigned>(std::stoul(argv[++k]));
        } else if (arg == "--stretch-memory-mb" && k + 1 < argc) {
            stretch_mb = std::stoul(argv[++k]);
        } else {
            std::cerr << "usage: qsym_acceptance [--no-stretch] [--stretch-seconds S] [--stretch-memory-mb M]\n";
            return 2;
        }
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4(stretch, stretch_seconds, stretch_mb);
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("acceptance: %s\n", g_blocking_failed ? "FAIL" : "PASS");
    return g_blocking_failed ? 1 : 0;
}
