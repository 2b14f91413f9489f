#include <gtest/gtest.h>

#include "qmb/qmatrices.hpp"
#include "qmb/verify.hpp"

using namespace qmb;

namespace {

GridOptions only_n(int n)
{
    GridOptions g;
    g.n = n;
    return g;
}

} // namespace

TEST(Suite, ExpansionCounts)
{
    EXPECT_EQ(expand_check("prop8").size(), 10U);
    GridOptions g = only_n(2);
    g.lambda_max = 2;
    EXPECT_EQ(expand_check("theorem1", g).size(), 12U);
    g = only_n(1);
    g.lambda_max = 3;
    EXPECT_EQ(expand_check("theorem1", g).size(), 4U);
    EXPECT_EQ(expand_check("commutativity_y", only_n(1)).size(), 1U);
    EXPECT_EQ(expand_check("xk_two_forms").size(), 6U);
    EXPECT_THROW(expand_check("nope"), std::invalid_argument);
}

TEST(Suite, EmptySelectionGivesEmptyReport)
{
    const auto report = run_suite({});
    EXPECT_TRUE(report.entries.empty());
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.to_json()["entries"].size(), 0U);
}

TEST(Suite, Prop8Passes)
{
    const auto report = run_suite(expand_check("prop8"));
    ASSERT_EQ(report.entries.size(), 10U);
    EXPECT_EQ(report.count(CheckStatus::Pass), 10U);
}

TEST(Suite, PbwDimensionList)
{
    CheckId id{"pbw_dims", Json{{"algebra", "HolMat"}, {"n", 2}, {"max_degree", 4}}};
    const auto e = run_check(id);
    EXPECT_EQ(e.status, CheckStatus::Pass);
    EXPECT_EQ(e.value.value_or(""), "(1, 4, 10, 20, 35)");
}

TEST(Suite, XkTwoFormsRecordsConventionFactor)
{
    for (const auto& id : expand_check("xk_two_forms")) {
        const auto e = run_check(id);
        EXPECT_EQ(e.status, CheckStatus::PassWithConventionFactor) << id.params.dump();
        ASSERT_TRUE(e.correction_factor.has_value());
        EXPECT_TRUE(Scalar::parse(*e.correction_factor).is_monomial());
    }
}

TEST(Suite, ReportSchema)
{
    const auto report = run_suite(expand_check("coroll1", only_n(1)));
    const Json j = report.to_json();
    ASSERT_EQ(j["entries"].size(), 1U);
    const Json& e = j["entries"][0];
    EXPECT_EQ(e["check"], "coroll1");
    EXPECT_EQ(e["params"]["n"], 1);
    EXPECT_EQ(e["status"], "pass");
    EXPECT_TRUE(e.contains("millis"));
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_FALSE(report.to_json(false)["entries"][0].contains("millis"));
}

TEST(Suite, DeterministicAcrossParallelism)
{
    GridOptions g;
    g.n = 2;
    g.lambda_max = 1;
    std::vector<CheckId> sel;
    for (const char* name : {"prop8", "theorem1", "coroll1", "associativity", "classical_limit"}) {
        auto part = expand_check(name, g);
        sel.insert(sel.end(), part.begin(), part.end());
    }
    const auto serial = run_suite(sel, 1);
    const auto parallel = run_suite(sel, 4);
    EXPECT_TRUE(serial.ok());
    EXPECT_EQ(serial.to_json(false).dump(), parallel.to_json(false).dump());
}

TEST(Suite, FailureCarriesWitness)
{
    CheckId id{"theorem1", Json{{"n", 1}, {"k", 2}, {"lambda", {1}}}};
    const auto e = run_check(id);
    EXPECT_EQ(e.status, CheckStatus::Fail);
    EXPECT_TRUE(e.witness.has_value());
}

TEST(CorruptedFixture, EngineChecksFailWithWitness)
{
    auto p = build_presentation(AlgebraKind::hol(2));
    const Letter a = z_letter(2, 1, 1);
    const Letter b = z_letter(2, 1, 2);
    p.replace_rule(b, a, {{Scalar::q(), Word{a, b}}});
    const auto broken = Algebra::make(std::move(p));

    const CheckId assoc{"associativity", Json{{"algebra", "HolMat"}, {"n", 2}, {"triples", 100}, {"max_degree", 3}}};
    const auto e1 = run_engine_check(assoc, broken);
    EXPECT_EQ(e1.status, CheckStatus::Fail);
    ASSERT_TRUE(e1.witness.has_value());
    EXPECT_FALSE(e1.witness->empty());

    const CheckId conf{"confluence_strategy", Json{{"algebra", "HolMat"}, {"n", 2}, {"samples", 30}, {"max_degree", 4}}};
    const auto e2 = run_engine_check(conf, broken);
    EXPECT_EQ(e2.status, CheckStatus::Fail);
    EXPECT_TRUE(e2.witness.has_value());

    // The healthy algebra passes the same checks.
    EXPECT_EQ(run_engine_check(assoc, algebra(AlgebraKind::hol(2))).status, CheckStatus::Pass);
    EXPECT_EQ(run_engine_check(conf, algebra(AlgebraKind::hol(2))).status, CheckStatus::Pass);
}
