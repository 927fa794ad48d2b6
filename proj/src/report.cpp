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

#include "qsym/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qsym/errors.hpp"
#include "qsym/lie.hpp"

namespace qsym {

using nlohmann::json;

const char *library_version() { return "0.1.0"; }

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// --- JSON mapping -----------------------------------------------------------

void to_json(json &j, const RankSummary &r) {
    j = json{{"rank", r.rank}, {"method", r.method}};
    if (r.prime) j["prime"] = *r.prime;
}
void from_json(const json &j, RankSummary &r) {
    j.at("rank").get_to(r.rank);
    j.at("method").get_to(r.method);
    r.prime = j.contains("prime") ? std::optional<std::uint64_t>(j.at("prime").get<std::uint64_t>()) : std::nullopt;
}

void to_json(json &j, const DimensionSummary &d) { j = json{{"dim", d.dim}, {"unknowns", d.unknowns}, {"rank", d.rank}}; }
void from_json(const json &j, DimensionSummary &d) {
    j.at("dim").get_to(d.dim);
    j.at("unknowns").get_to(d.unknowns);
    j.at("rank").get_to(d.rank);
}

namespace {

template <class T>
void put_optional(json &j, const char *key, const std::optional<T> &v) {
    if (v) j[key] = *v;
}

template <class T>
void get_optional(const json &j, const char *key, std::optional<T> &v) {
    v = j.contains(key) ? std::optional<T>(j.at(key).get<T>()) : std::nullopt;
}

}  // namespace

void to_json(json &j, const DecideSection &d) {
    j = json{{"verdict", d.verdict},
             {"condition_a", {{"status", d.condition_a}, {"quadratic_p", d.quadratic_p}, {"quadratic_pq", d.quadratic_pq}}},
             {"linear", {{"p", d.linear_p}, {"pq", d.linear_pq}}},
             {"failure_witness", d.failure_witness},
             {"monte_carlo", d.monte_carlo}};
    json b{{"status", d.condition_b}};
    put_optional(b, "center_dim", d.center_dim);
    put_optional(b, "rank_restricted", d.rank_restricted);
    put_optional(b, "rank_full", d.rank_full);
    put_optional(b, "t_restricted", d.t_restricted);
    put_optional(b, "t_full", d.t_full);
    j["condition_b"] = std::move(b);
}
void from_json(const json &j, DecideSection &d) {
    j.at("verdict").get_to(d.verdict);
    const auto &a = j.at("condition_a");
    a.at("status").get_to(d.condition_a);
    a.at("quadratic_p").get_to(d.quadratic_p);
    a.at("quadratic_pq").get_to(d.quadratic_pq);
    const auto &b = j.at("condition_b");
    b.at("status").get_to(d.condition_b);
    get_optional(b, "center_dim", d.center_dim);
    get_optional(b, "rank_restricted", d.rank_restricted);
    get_optional(b, "rank_full", d.rank_full);
    get_optional(b, "t_restricted", d.t_restricted);
    get_optional(b, "t_full", d.t_full);
    j.at("linear").at("p").get_to(d.linear_p);
    j.at("linear").at("pq").get_to(d.linear_pq);
    j.at("failure_witness").get_to(d.failure_witness);
    j.at("monte_carlo").get_to(d.monte_carlo);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OracleSection, verdict, closure_dim_p, closure_dim_pq, agrees)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClosureSection, lie_dim, semisimple_dim, center_dim, generation_depth)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SymmetrySection, kind, set, dim, basis)

std::string report_to_json(const ReportDocument &r) {
    json j{{"schema", "qsym-report"},
           {"schema_version", r.schema_version},
           {"tool_version", r.tool_version},
           {"command", r.command},
           {"input_digest", r.input_digest},
           {"options",
            {{"rank_mode", r.rank_mode},
             {"modular_threshold", r.modular_threshold},
             {"seed", r.seed},
             {"force_condition_b", r.force_condition_b}}}};
    put_optional(j, "decide", r.decide);
    put_optional(j, "oracle", r.oracle);
    put_optional(j, "closure", r.closure);
    put_optional(j, "symmetries", r.symmetries);
    if (!r.timings.empty()) j["timings"] = r.timings;
    return j.dump(2) + "\n";
}

ReportDocument report_from_json(std::string_view text) {
    try {
        json j = json::parse(text);
        if (j.at("schema").get<std::string>() != "qsym-report") throw ParseError("not a qsym report", 0, 1);
        ReportDocument r;
        j.at("schema_version").get_to(r.schema_version);
        if (r.schema_version != kReportSchemaVersion) {
            throw ParseError("unsupported report schema version " + std::to_string(r.schema_version), 0, 1);
        }
        j.at("tool_version").get_to(r.tool_version);
        j.at("command").get_to(r.command);
        j.at("input_digest").get_to(r.input_digest);
        const auto &o = j.at("options");
        o.at("rank_mode").get_to(r.rank_mode);
        o.at("modular_threshold").get_to(r.modular_threshold);
        o.at("seed").get_to(r.seed);
        o.at("force_condition_b").get_to(r.force_condition_b);
        get_optional(j, "decide", r.decide);
        get_optional(j, "oracle", r.oracle);
        get_optional(j, "closure", r.closure);
        get_optional(j, "symmetries", r.symmetries);
        if (j.contains("timings")) j.at("timings").get_to(r.timings);
        return r;
    } catch (const json::parse_error &e) {
        throw ParseError(e.what(), 0, e.byte == 0 ? 1 : e.byte);
    } catch (const json::exception &e) {
        throw ParseError(e.what(), 0, 1);
    }
}

// --- human-readable form ----------------------------------------------------

namespace {

std::string rank_text(const RankSummary &r) {
    std::string s = std::to_string(r.rank) + " (" + r.method;
    if (r.prime) s += " mod " + std::to_string(*r.prime);
    return s + ")";
}

void matrix_text(std::ostringstream &out, const char *name, const MatrixText &m) {
    out << "  " << name << " =";
    if (m.empty()) out << " (empty)";
    out << "\n";
    for (const auto &row : m) {
        out << "    [";
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k];
        out << "]\n";
    }
}

}  // namespace

std::string report_to_text(const ReportDocument &r) {
    std::ostringstream out;
    out << "qsym " << r.tool_version << " " << r.command << "  (input " << r.input_digest << ", rank mode "
        << r.rank_mode << ")\n";
    if (r.closure) {
        const auto &c = *r.closure;
        out << "Lie closure of P: dim " << c.lie_dim << " = semisimple " << c.semisimple_dim << " + center "
            << c.center_dim << "  (bracket depth " << c.generation_depth << ")\n";
    }
    if (r.decide) {
        const auto &d = *r.decide;
        out << "verdict: " << d.verdict << (d.monte_carlo ? "  [modular arithmetic, Monte-Carlo]" : "") << "\n";
        out << "condition A (quadratic symmetries): " << d.condition_a << "\n"
            << "  dim ts(P) = " << d.quadratic_p.dim << ", dim ts(P u Q) = " << d.quadratic_pq.dim << "\n";
        out << "condition B (central projections): " << d.condition_b << "\n";
        if (d.center_dim) out << "  dim center = " << *d.center_dim << "\n";
        if (d.rank_restricted && d.rank_full) {
            out << "  rank T~ = " << rank_text(*d.rank_restricted) << ", rank T = " << rank_text(*d.rank_full) << "\n";
        }
        if (d.t_restricted) matrix_text(out, "T~", *d.t_restricted);
        if (d.t_full) matrix_text(out, "T", *d.t_full);
        out << "linear symmetries: dim P' = " << d.linear_p.dim << ", dim (P u Q)' = " << d.linear_pq.dim << "\n";
        if (!d.failure_witness.empty()) out << "witness: " << d.failure_witness << "\n";
    }
    if (r.oracle) {
        const auto &o = *r.oracle;
        out << "oracle: " << o.verdict << "  (dim <P> = " << o.closure_dim_p << ", dim <P u Q> = " << o.closure_dim_pq
            << ") " << (o.agrees ? "agrees" : "DISAGREES") << "\n";
    }
    if (r.symmetries) {
        const auto &s = *r.symmetries;
        out << s.kind << " symmetries of " << (s.set == "p" ? "P" : "P u Q") << ": dim " << s.dim << "\n";
        for (std::size_t k = 0; k < s.basis.size(); ++k) out << "  S" << k + 1 << " = " << s.basis[k] << "\n";
    }
    for (const auto &[phase, secs] : r.timings) out << "time " << phase << ": " << secs << " s\n";
    return out.str();
}

// --- drivers ----------------------------------------------------------------

namespace {

RankSummary summarize(const RankResult &r) { return {r.rank, rank_method_name(r.method), r.prime}; }

DimensionSummary summarize(const SymmetryDimension &d) { return {d.dim, d.unknowns, summarize(d.rank)}; }

MatrixText matrix_strings(const SparseMatrix &m) {
    MatrixText out(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) out[i].push_back(m.at(i, j).to_string());
    }
    return out;
}

ReportDocument header(const InstanceFile &file, const RunOptions &options, const char *command) {
    ReportDocument r;
    r.tool_version = library_version();
    r.command = command;
    r.input_digest = fnv1a64_hex(file.to_text());
    r.rank_mode = rank_mode_name(options.decide.rank.mode);
    r.modular_threshold = options.decide.rank.modular_threshold;
    r.seed = options.decide.rank.seed;
    r.force_condition_b = options.decide.force_condition_b;
    return r;
}

DecideSection decide_section(const SimulabilityReport &s) {
    DecideSection d;
    d.verdict = verdict_name(s.verdict);
    d.condition_a = condition_name(s.condition_a);
    d.quadratic_p = summarize(s.quadratic_p);
    d.quadratic_pq = summarize(s.quadratic_pq);
    d.condition_b = condition_name(s.condition_b);
    if (s.projections) {
        d.center_dim = s.projections->center_basis.size();
        d.rank_restricted = summarize(s.projections->rank_restricted);
        d.rank_full = summarize(s.projections->rank_full);
        d.t_restricted = matrix_strings(s.projections->t_restricted);
        d.t_full = matrix_strings(s.projections->t_full);
    }
    d.linear_p = summarize(s.linear_p);
    d.linear_pq = summarize(s.linear_pq);
    d.failure_witness = s.failure_witness;
    d.monte_carlo = s.monte_carlo;
    return d;
}

template <class F>
double seconds(F &&fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void attach_oracle(ReportDocument &r, const ProblemInstance &inst, const RunOptions &options,
                   std::map<std::string, double> &timings) {
    OracleResult o;
    timings["oracle"] = seconds([&] { o = oracle_verdict(inst, options.max_dim); });
    r.oracle = OracleSection{verdict_name(o.verdict), o.closure_dim_p, o.closure_dim_pq,
                             r.decide && r.decide->verdict == verdict_name(o.verdict)};
}

}  // namespace

ReportDocument run_decide(const InstanceFile &file, const RunOptions &options) {
    auto r = header(file, options, "decide");
    auto inst = file.to_problem();
    auto s = decide(inst, options.decide);
    r.decide = decide_section(s);
    auto timings = s.timings;
    if (options.oracle) attach_oracle(r, inst, options, timings);
    if (options.timings) r.timings = timings;
    return r;
}

ReportDocument run_closure(const InstanceFile &file, const RunOptions &options) {
    auto r = header(file, options, "closure");
    auto inst = file.to_problem();
    std::map<std::string, double> timings;
    timings["lie_closure"] = seconds([&] {
        auto lie = lie_closure(inst.p_set, inst.dim, options.max_dim);
        auto dec = decompose(lie);
        r.closure = ClosureSection{lie.dim, dec.semisimple_dim, dec.center_dim, lie.generation_depth};
    });
    auto opts = options.decide;
    opts.force_condition_b = true;
    r.force_condition_b = true;
    auto s = decide(inst, opts);
    r.decide = decide_section(s);
    timings.insert(s.timings.begin(), s.timings.end());
    if (options.oracle) attach_oracle(r, inst, options, timings);
    if (options.timings) r.timings = timings;
    return r;
}

ReportDocument run_symmetries(const InstanceFile &file, SymmetryRequest what, GeneratorSet set,
                              const RunOptions &options) {
    auto r = header(file, options, "symmetries");
    auto inst = file.to_problem();
    const auto gens = set == GeneratorSet::P ? inst.p_set : inst.union_set();
    SymmetrySection sec;
    sec.set = set == GeneratorSet::P ? "p" : "pq";
    std::vector<SparseMatrix> basis;
    double t = seconds([&] {
        switch (what) {
            case SymmetryRequest::Linear:
                sec.kind = "linear";
                basis = commutant(gens, inst.dim).basis;
                break;
            case SymmetryRequest::Quadratic:
                sec.kind = "quadratic";
                basis = quadratic_commutant(gens, inst.dim).basis;
                break;
            case SymmetryRequest::Center:
                sec.kind = "center";
                basis = center_of_commutant(gens, inst.dim);
                break;
        }
    });
    sec.dim = basis.size();
    for (const auto &b : basis) sec.basis.push_back(matrix_literal(b));
    r.symmetries = std::move(sec);
    if (options.timings) r.timings["symmetries"] = t;
    return r;
}

}  // namespace qsym
