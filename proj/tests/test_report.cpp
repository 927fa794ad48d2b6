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

#include "qsym/errors.hpp"
#include "qsym/report.hpp"

namespace qsym {
namespace {

InstanceFile fixture_file(const char *name) { return instance_file_from_model(example_model(name)); }

RunOptions exact_options() {
    RunOptions o;
    o.decide.rank.mode = RankMode::Exact;
    return o;
}

TEST(Digest, KnownFnv1aVectors) {
    EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
    EXPECT_EQ(fnv1a64_hex("foobar"), "85944171f73967e8");
}

TEST(Report, DecideDocumentRoundTrips) {
    RunOptions o = exact_options();
    o.oracle = true;
    for (const char *name : {"ex1", "ex2a", "ex2b"}) {
        auto doc = run_decide(fixture_file(name), o);
        ASSERT_TRUE(doc.decide.has_value());
        ASSERT_TRUE(doc.oracle.has_value());
        EXPECT_TRUE(doc.oracle->agrees);
        EXPECT_TRUE(doc.timings.empty());
        auto json = report_to_json(doc);
        EXPECT_EQ(report_from_json(json), doc) << json;
        EXPECT_EQ(report_to_json(report_from_json(json)), json);
    }
}

TEST(Report, DecideContents) {
    auto doc = run_decide(fixture_file("ex2a"), exact_options());
    const auto &d = *doc.decide;
    EXPECT_EQ(doc.command, "decide");
    EXPECT_EQ(doc.rank_mode, "exact");
    EXPECT_EQ(doc.input_digest, fnv1a64_hex(fixture_file("ex2a").to_text()));
    EXPECT_EQ(d.verdict, "not_simulable");
    EXPECT_EQ(d.condition_a, "holds");
    EXPECT_EQ(d.condition_b, "fails");
    EXPECT_EQ(d.quadratic_p.dim, 16u);
    EXPECT_EQ(d.center_dim, 3u);
    ASSERT_TRUE(d.rank_full.has_value());
    EXPECT_EQ(d.rank_full->rank, 2u);
    EXPECT_EQ(d.rank_full->method, "exact");
    EXPECT_FALSE(d.rank_full->prime.has_value());
    ASSERT_TRUE(d.t_full.has_value());
    EXPECT_EQ(d.t_full->size(), 3u);
}

TEST(Report, ModularPrimeSurvivesRoundTrip) {
    RunOptions o;
    o.decide.rank.mode = RankMode::Modular;
    auto doc = run_decide(fixture_file("ex2b"), o);
    EXPECT_TRUE(doc.decide->monte_carlo);
    ASSERT_TRUE(doc.decide->quadratic_p.rank.prime.has_value());
    EXPECT_EQ(report_from_json(report_to_json(doc)), doc);
}

TEST(Report, ClosureAndSymmetryDocumentsRoundTrip) {
    auto closure = run_closure(fixture_file("ex2a"), exact_options());
    ASSERT_TRUE(closure.closure.has_value());
    EXPECT_EQ(closure.closure->lie_dim, 4u);
    EXPECT_EQ(closure.closure->semisimple_dim, 3u);
    EXPECT_EQ(closure.closure->center_dim, 1u);
    EXPECT_TRUE(closure.force_condition_b);
    EXPECT_EQ(report_from_json(report_to_json(closure)), closure);

    for (auto what : {SymmetryRequest::Linear, SymmetryRequest::Quadratic, SymmetryRequest::Center}) {
        auto doc = run_symmetries(fixture_file("ex1"), what, GeneratorSet::P, exact_options());
        ASSERT_TRUE(doc.symmetries.has_value());
        EXPECT_EQ(doc.symmetries->basis.size(), doc.symmetries->dim);
        EXPECT_EQ(report_from_json(report_to_json(doc)), doc);
    }
    auto quad = run_symmetries(fixture_file("ex1"), SymmetryRequest::Quadratic, GeneratorSet::PQ, exact_options());
    EXPECT_EQ(quad.symmetries->dim, 2u);
    EXPECT_EQ(quad.symmetries->set, "pq");
}

TEST(Report, TimingsOnlyWhenRequested) {
    RunOptions o = exact_options();
    o.timings = true;
    auto doc = run_decide(fixture_file("ex1"), o);
    EXPECT_FALSE(doc.timings.empty());
    auto back = report_from_json(report_to_json(doc));
    EXPECT_EQ(back.timings.size(), doc.timings.size());
    EXPECT_EQ(report_to_json(run_decide(fixture_file("ex1"), exact_options())).find("timings"), std::string::npos);
}

TEST(Report, RepeatedRunsAreByteIdentical) {
    for (const char *name : {"ex1", "ex2a", "ex2b"}) {
        auto a = report_to_json(run_decide(fixture_file(name), exact_options()));
        auto b = report_to_json(run_decide(fixture_file(name), exact_options()));
        EXPECT_EQ(a, b);
    }
}

TEST(Report, MalformedJsonIsParseError) {
    EXPECT_THROW(report_from_json("{"), ParseError);
    EXPECT_THROW(report_from_json("{\"schema\": \"other\"}"), ParseError);
    auto json = report_to_json(run_decide(fixture_file("ex1"), exact_options()));
    auto pos = json.find("\"schema_version\": 1");
    ASSERT_NE(pos, std::string::npos);
    json.replace(pos, 19, "\"schema_version\": 99");
    EXPECT_THROW(report_from_json(json), ParseError);
}

TEST(Report, HumanTextMentionsVerdictAndDims) {
    auto text = report_to_text(run_decide(fixture_file("ex1"), exact_options()));
    EXPECT_NE(text.find("verdict: not_simulable"), std::string::npos);
    EXPECT_NE(text.find("dim ts(P) = 4, dim ts(P u Q) = 2"), std::string::npos);
}

}  // namespace
}  // namespace qsym
