#include <gtest/gtest.h>

#include <random>

#include "qmb/qmatrices.hpp"

using namespace qmb;

namespace {

NcPoly z(int n, int a, int alpha) { return algebra(AlgebraKind::pol(n))->letter(z_letter(n, a, alpha)); }
NcPoly zs(int n, int a, int alpha) { return algebra(AlgebraKind::pol(n))->letter(zs_letter(n, a, alpha)); }
NcPoly t(int n, int i, int j, int sign = 1) { return algebra(AlgebraKind::mat2n(n, sign))->letter(t_letter(n, i, j)); }

NcPoly random_poly(const AlgebraKind& kind, int degree, std::mt19937_64& rng)
{
    const auto alg = algebra(kind);
    return alg->normal_form(random_combination(*alg, degree, 3, rng));
}

} // namespace

TEST(Presentations, GeneratorAndRuleCounts)
{
    const auto pol1 = algebra(AlgebraKind::pol(1));
    EXPECT_EQ(pol1->presentation().size(), 2U);
    EXPECT_EQ(pol1->presentation().rule_count(), 1U);
    const auto hol2 = algebra(AlgebraKind::hol(2));
    EXPECT_EQ(hol2->presentation().size(), 4U);
    EXPECT_EQ(hol2->presentation().rule_count(), 6U);
    const auto m1 = algebra(AlgebraKind::mat2n(1));
    EXPECT_EQ(m1->presentation().size(), 4U);
    EXPECT_EQ(m1->presentation().rule_count(), 6U);
    EXPECT_EQ(algebra(AlgebraKind::pol(2))->presentation().rule_count(), 28U);
}

TEST(Presentations, RCoefficients)
{
    EXPECT_EQ(r_coefficient(1, 2, 1, 2), Scalar::q(-1));
    EXPECT_EQ(r_coefficient(1, 1, 1, 1), Scalar(1));
    EXPECT_EQ(r_coefficient(1, 1, 2, 2), -(Scalar::q(-2) - Scalar(1)));
    EXPECT_TRUE(r_coefficient(1, 2, 2, 1).is_zero());
}

TEST(Presentations, Mat2nRelationsAtSizeTwo)
{
    // Standard 2x2 quantum matrix relations.
    const Scalar q = Scalar::q();
    EXPECT_EQ(t(1, 1, 2) * t(1, 1, 1), Scalar::q(-1) * (t(1, 1, 1) * t(1, 1, 2)));
    EXPECT_EQ(t(1, 2, 1) * t(1, 1, 1), Scalar::q(-1) * (t(1, 1, 1) * t(1, 2, 1)));
    EXPECT_EQ(t(1, 2, 1) * t(1, 1, 2), t(1, 1, 2) * t(1, 2, 1));
    EXPECT_EQ(t(1, 2, 2) * t(1, 1, 1), t(1, 1, 1) * t(1, 2, 2) - (q - Scalar::q(-1)) * (t(1, 1, 2) * t(1, 2, 1)));
}

TEST(Minors, Examples)
{
    const auto pol = AlgebraKind::pol(2);
    EXPECT_EQ(qminor(pol, IndexSet({2}), IndexSet({1})), z(2, 2, 1));
    EXPECT_EQ(qminor(pol, IndexSet({1, 2}), IndexSet({1, 2})), z(2, 1, 1) * z(2, 2, 2) - Scalar::q() * (z(2, 1, 2) * z(2, 2, 1)));
    EXPECT_EQ(det_z(pol), qminor(pol, IndexSet({1, 2}), IndexSet({1, 2})));
    EXPECT_EQ(det_t(1), t(1, 1, 1) * t(1, 2, 2) - Scalar::q() * (t(1, 1, 2) * t(1, 2, 1)));
    EXPECT_THROW(qminor(pol, IndexSet({1, 3}), IndexSet({1, 2})), IndexOutOfRange);
    EXPECT_THROW(IndexSet({2, 1}), std::invalid_argument);
}

TEST(Minors, QuantumDeterminantIsCentral)
{
    for (int n = 1; n <= 3; ++n) {
        const auto kind = AlgebraKind::hol(n);
        const NcPoly det = det_z(kind);
        const auto alg = algebra(kind);
        for (Letter g = 0; g < alg->presentation().size(); ++g) {
            EXPECT_EQ(det * alg->letter(g), alg->letter(g) * det) << "n=" << n << " " << alg->presentation().label(g);
        }
    }
    const NcPoly dt = det_t(2);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            EXPECT_EQ(dt * t(2, i, j), t(2, i, j) * dt);
        }
    }
}

TEST(Elements, YExamples)
{
    EXPECT_EQ(build_y(1, 1), z(1, 1, 1) * zs(1, 1, 1));
    NcPoly sum = algebra(AlgebraKind::pol(2))->zero();
    for (int a = 1; a <= 2; ++a) {
        for (int alpha = 1; alpha <= 2; ++alpha) {
            sum += z(2, a, alpha) * zs(2, a, alpha);
        }
    }
    EXPECT_EQ(build_y(2, 1), sum);
    const NcPoly det = det_z(AlgebraKind::pol(2));
    EXPECT_EQ(build_y(2, 2), det * apply_involution(Involution::StarPol, det));
}

TEST(Elements, XDisplayExamples)
{
    EXPECT_EQ(build_x_display(1, 1), t(1, 1, 2) * t(1, 2, 1));
    EXPECT_EQ(build_x_display(2, 2).degree(), 4);
    EXPECT_TRUE(build_x_display(2, 1).is_homogeneous());
}

TEST(Elements, ConventionFactors)
{
    EXPECT_EQ(x_convention_factor(1, 1), -Scalar::q());
    EXPECT_EQ(x_convention_factor(2, 1), Scalar::q(2));
    EXPECT_EQ(x_convention_factor(2, 2), Scalar::q(4));
    EXPECT_EQ(build_x(1, 1), -Scalar::q() * build_x_display(1, 1));
}

TEST(Involutions, GeneratorImages)
{
    EXPECT_EQ(involution_image(Involution::Star2Sl, 1, 1, 1), t(1, 2, 2));
    EXPECT_EQ(involution_image(Involution::StarSl, 1, 1, 2), -Scalar::q() * t(1, 2, 1));
    EXPECT_EQ(apply_involution(Involution::StarPol, z(1, 1, 1)), zs(1, 1, 1));
    EXPECT_EQ(apply_involution(Involution::StarPol, zs(1, 1, 1)), z(1, 1, 1));
}

TEST(Involutions, AntihomomorphismAndInvolutivity)
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 2; ++n) {
        for (int i = 0; i < 15; ++i) {
            const NcPoly f = random_poly(AlgebraKind::pol(n), 2, rng);
            const NcPoly g = random_poly(AlgebraKind::pol(n), 2, rng);
            EXPECT_EQ(apply_involution(Involution::StarPol, f * g),
                      apply_involution(Involution::StarPol, g) * apply_involution(Involution::StarPol, f));
            EXPECT_EQ(apply_involution(Involution::StarPol, apply_involution(Involution::StarPol, f)), f);
        }
    }
    for (const auto inv : {Involution::StarSl, Involution::Star2Sl}) {
        for (int i = 0; i < 10; ++i) {
            const NcPoly f = random_poly(AlgebraKind::mat2n(1), 2, rng);
            const NcPoly g = random_poly(AlgebraKind::mat2n(1), 2, rng);
            EXPECT_EQ(apply_involution(inv, f * g), apply_involution(inv, g) * apply_involution(inv, f));
            EXPECT_EQ(apply_involution(inv, apply_involution(inv, f)), f);
        }
    }
}

TEST(Sigma, ExamplesAndInvolutivity)
{
    EXPECT_EQ(sigma(t(1, 1, 1)), t(1, 1, 1, -1));
    // Coefficients are not conjugated; only the word order is reversed.
    const NcPoly f = Scalar::q() * (t(1, 1, 1) * t(1, 1, 2));
    EXPECT_EQ(sigma(f), Scalar::q(2) * (t(1, 1, 1, -1) * t(1, 1, 2, -1)));
    EXPECT_EQ(sigma(f), t(1, 1, 2, -1) * t(1, 1, 1, -1) * algebra(AlgebraKind::mat2n(1, -1))->scalar(Scalar::q()));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const NcPoly g = random_poly(AlgebraKind::mat2n(1), 3, rng);
        const NcPoly h = random_poly(AlgebraKind::mat2n(1), 2, rng);
        EXPECT_EQ(sigma(sigma(g)), g);
        EXPECT_EQ(sigma(g * h), sigma(h) * sigma(g));
    }
}

TEST(Sigma, ScalesXkAtSizeOne)
{
    const NcPoly lhs = sigma(build_x(1, 1, 1));
    EXPECT_EQ(lhs, Scalar::q(2) * build_x(1, 1, -1));
}

TEST(JnMap, Examples)
{
    EXPECT_EQ(jn_map(z(2, 2, 2)), algebra(AlgebraKind::pol(1))->one());
    EXPECT_TRUE(jn_map(z(2, 1, 2)).is_zero());
    EXPECT_EQ(jn_map(z(2, 1, 1)), Scalar::q(-1) * z(1, 1, 1));
    EXPECT_EQ(jn_map(zs(2, 2, 2)), algebra(AlgebraKind::pol(1))->one());
}

TEST(JnMap, IsMultiplicative)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const NcPoly f = random_poly(AlgebraKind::pol(2), 2, rng);
        const NcPoly g = random_poly(AlgebraKind::pol(2), 2, rng);
        EXPECT_EQ(jn_map(f * g), jn_map(f) * jn_map(g));
    }
}

TEST(ModDet, Examples)
{
    const auto alg = algebra(AlgebraKind::mat2n(1));
    EXPECT_TRUE(equal_mod_det(det_t(1), alg->one(), 1));
    const NcPoly w = t(1, 1, 2) * t(1, 2, 1);
    EXPECT_TRUE(equal_mod_det(w, w, 1));
    EXPECT_FALSE(equal_mod_det(t(1, 1, 1) * t(1, 2, 2), alg->one(), 1));
    EXPECT_EQ(ratio_mod_det(Scalar::q(3) * det_t(1) * w, w, 1), std::optional<Scalar>(Scalar::q(3)));
    EXPECT_THROW(equal_mod_det(t(1, 1, 1), alg->one(), 1), DegreeMismatch);
}
