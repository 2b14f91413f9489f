#include <gtest/gtest.h>

#include <random>

#include "qmb/ncalg.hpp"
#include "qmb/qmatrices.hpp"

using namespace qmb;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

NcPoly L(const std::shared_ptr<const Algebra>& alg, const char* label) { return alg->letter(label); }

std::vector<AlgebraKind> engine_kinds()
{
    return {AlgebraKind::hol(1), AlgebraKind::hol(2), AlgebraKind::pol(1), AlgebraKind::pol(2),
            AlgebraKind::mat2n(1), AlgebraKind::mat2n(1, -1), AlgebraKind::mat2n(2)};
}

} // namespace

TEST(Word, DeglexOrder)
{
    EXPECT_TRUE(deglex_less(Word{3}, Word{0, 0}));
    EXPECT_TRUE(deglex_less(Word{0, 1}, Word{1, 0}));
    EXPECT_FALSE(deglex_less(Word{1, 0}, Word{1, 0}));
    EXPECT_TRUE(deglex_less(Word{}, Word{0}));
}

TEST(NormalForm, HolMat2CrossRule)
{
    const auto alg = algebra(AlgebraKind::hol(2));
    const NcPoly got = L(alg, "z[2,2]") * L(alg, "z[1,1]");
    const NcPoly want = L(alg, "z[1,1]") * L(alg, "z[2,2]") - Scalar::parse("q - q^-1") * (L(alg, "z[1,2]") * L(alg, "z[2,1]"));
    EXPECT_EQ(got, want);
    EXPECT_EQ(got.size(), 2U);
}

TEST(NormalForm, PolMat1StarRelation)
{
    const auto alg = algebra(AlgebraKind::pol(1));
    const NcPoly got = L(alg, "zs[1,1]") * L(alg, "z[1,1]");
    EXPECT_EQ(got.to_string(), "q^2*z[1,1]*zs[1,1] + 1 - q^2");
    EXPECT_EQ(alg->normal_form(Word{zs_letter(1, 1, 1), z_letter(1, 1, 1)}), got);
}

TEST(NormalForm, CanonicalWordsAreFixed)
{
    const auto alg = algebra(AlgebraKind::hol(2));
    const NcPoly w = L(alg, "z[1,1]") * L(alg, "z[1,2]");
    ASSERT_EQ(w.size(), 1U);
    EXPECT_TRUE(w.terms().begin()->second.is_one());
    EXPECT_EQ(alg->normal_form(w.terms().begin()->first), w);
    EXPECT_EQ(alg->one() * w, w);
}

TEST(NormalForm, GradedDimensions)
{
    EXPECT_EQ(algebra(AlgebraKind::hol(2))->graded_dimension(2), 10U);
    EXPECT_EQ(algebra(AlgebraKind::pol(1))->graded_dimension(2), 3U);
    for (const auto& kind : engine_kinds()) {
        const auto alg = algebra(kind);
        EXPECT_EQ(alg->graded_dimension(0), 1U) << kind.name();
        const auto g = alg->presentation().size();
        for (int d = 1; d <= 4; ++d) {
            EXPECT_EQ(alg->graded_dimension(d), binomial(g + d - 1, d)) << kind.name() << " degree " << d;
        }
    }
}

TEST(NormalForm, StepBudgetIsEnforced)
{
    auto p = build_presentation(AlgebraKind::pol(2));
    const auto alg = Algebra::make(std::move(p));
    auto* mut = const_cast<Algebra*>(alg.get());
    mut->set_step_budget(3);
    Combination expr;
    Word w;
    for (int i = 0; i < 3; ++i) {
        w.push_back(zs_letter(2, 1, 1));
    }
    for (int i = 0; i < 3; ++i) {
        w.push_back(z_letter(2, 2, 2));
    }
    expr.push_back({Scalar(1), w});
    EXPECT_THROW(alg->normal_form_reference(expr, Strategy::LeftmostInnermost), StepBudgetExceeded);
}

TEST(Presentation, RejectsNonDecreasingRules)
{
    Presentation p("bad", {"a", "b"}, {LetterClass::Holomorphic, LetterClass::Holomorphic}, Scalar::q());
    p.set_rule(0, 1, {{Scalar(1), Word{1, 0}}});
    EXPECT_THROW(p.validate(), PresentationError);
    EXPECT_THROW(Algebra::make(p), PresentationError);
}

TEST(EngineProperty, AssociativityAndStrategyAgreement)
{
    std::mt19937_64 rng(2024);
    for (const auto& kind : engine_kinds()) {
        const auto alg = algebra(kind);
        for (int i = 0; i < 25; ++i) {
            const NcPoly a = alg->normal_form(random_combination(*alg, 2, 3, rng));
            const NcPoly b = alg->normal_form(random_combination(*alg, 2, 3, rng));
            const NcPoly c = alg->normal_form(random_combination(*alg, 2, 3, rng));
            EXPECT_EQ((a * b) * c, a * (b * c)) << kind.name();
            EXPECT_EQ(a * (b + c), a * b + a * c) << kind.name();

            const Combination e = random_combination(*alg, 4, 3, rng);
            const NcPoly memo = alg->normal_form(e);
            EXPECT_EQ(memo, alg->normal_form_reference(e, Strategy::LeftmostInnermost)) << kind.name();
            EXPECT_EQ(memo, alg->normal_form_reference(e, Strategy::RightmostInnermost)) << kind.name();
            for (const auto& [w, coeff] : memo.terms()) {
                EXPECT_TRUE(alg->presentation().is_canonical(w));
            }
        }
    }
}

TEST(EngineProperty, EveryOverlapResolves)
{
    for (const auto& kind : engine_kinds()) {
        const auto report = check_overlaps(*algebra(kind));
        if (kind.n > 1) {
            EXPECT_GT(report.overlaps, 0U) << kind.name();
        }
        EXPECT_FALSE(report.unresolved.has_value()) << kind.name() << ": " << report.unresolved.value_or("");
    }
}

TEST(EngineProperty, CorruptedRuleIsDetected)
{
    // z12 z11 -> q z11 z12 instead of q^-1 z11 z12 breaks confluence.
    auto p2 = build_presentation(AlgebraKind::hol(2));
    const Letter a = z_letter(2, 1, 1);
    const Letter b = z_letter(2, 1, 2);
    p2.replace_rule(b, a, {{Scalar::q(), Word{a, b}}});
    const auto broken2 = Algebra::make(std::move(p2));
    const auto report = check_overlaps(*broken2);
    ASSERT_TRUE(report.unresolved.has_value());
    EXPECT_FALSE(report.unresolved->empty());
}

TEST(Utilities, FirstDifferenceAndProportionality)
{
    const auto alg = algebra(AlgebraKind::pol(1));
    const NcPoly a = alg->letter("z[1,1]") + alg->scalar(Scalar(2));
    const NcPoly b = Scalar::q(3) * a;
    EXPECT_FALSE(first_difference(a, a).has_value());
    const auto diff = first_difference(a, b);
    ASSERT_TRUE(diff.has_value());
    EXPECT_EQ(proportionality_factor(b, a), std::optional<Scalar>(Scalar::q(3)));
    EXPECT_FALSE(proportionality_factor(a + alg->letter("zs[1,1]"), a).has_value());
}
