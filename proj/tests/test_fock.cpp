#include <gtest/gtest.h>

#include <random>

#include "qmb/fock.hpp"
#include "qmb/symfun.hpp"

using namespace qmb;

namespace {

NcPoly z(int n, int a, int alpha) { return algebra(AlgebraKind::pol(n))->letter(z_letter(n, a, alpha)); }
NcPoly zs(int n, int a, int alpha) { return algebra(AlgebraKind::pol(n))->letter(zs_letter(n, a, alpha)); }

FockVector on_vacuum(const NcPoly& f, int n) { return fock_apply(f, FockVector::vacuum(n)); }

} // namespace

TEST(Partitions, Enumeration)
{
    EXPECT_EQ(partitions(1, 3).size(), 4U);
    EXPECT_EQ(partitions(2, 2).size(), 6U);
    EXPECT_EQ(partitions(3, 2).size(), 10U);
    EXPECT_TRUE(partitions(2, 0).front().is_zero());
    EXPECT_EQ(Partition({1, 0}).to_string(), "(1,0)");
    EXPECT_THROW(Partition({0, 1}), std::invalid_argument);
}

TEST(Fock, ActionExamples)
{
    EXPECT_TRUE(on_vacuum(zs(1, 1, 1), 1).is_zero());
    EXPECT_EQ(on_vacuum(zs(1, 1, 1) * z(1, 1, 1), 1), Scalar::parse("1 - q^2") * FockVector::vacuum(1));
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= n; ++k) {
            EXPECT_TRUE(on_vacuum(build_y(n, k), n).is_zero()) << n << "," << k;
        }
    }
}

TEST(Fock, InnerProductExamples)
{
    const FockVector v0 = FockVector::vacuum(1);
    EXPECT_EQ(inner_product(v0, v0), Scalar(1));
    const FockVector zv = on_vacuum(z(1, 1, 1), 1);
    EXPECT_EQ(inner_product(zv, zv), Scalar::parse("1 - q^2"));
    EXPECT_TRUE(inner_product(zv, v0).is_zero());
    const FockVector w = on_vacuum(z(2, 1, 1) * z(2, 2, 1), 2);
    EXPECT_TRUE(inner_product(w, on_vacuum(z(2, 1, 2), 2)).is_zero());
}

TEST(Fock, ULambdaExamples)
{
    EXPECT_EQ(u_lambda(2, Partition::zero(2)), FockVector::vacuum(2));
    EXPECT_EQ(u_lambda(1, Partition({3})), on_vacuum(z(1, 1, 1).pow(3), 1));
    const NcPoly det = det_z(AlgebraKind::pol(2));
    EXPECT_EQ(u_lambda(2, Partition({2, 1})), on_vacuum(det * z(2, 1, 1), 2));
}

TEST(Fock, EigenvalueExamples)
{
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= n; ++k) {
            EXPECT_TRUE(eigenvalue_on(build_y(n, k), Partition::zero(n)).is_zero());
        }
    }
    EXPECT_EQ(eigenvalue_on(build_y(2, 1), Partition({1, 0})), Scalar::parse("1 - q^2"));
    EXPECT_THROW(eigenvalue_on(z(1, 1, 1), Partition({1})), NotProportional);
}

// Independent oracle: on C[z] v0 the relation z* z = q^2 z z* + 1 - q^2
// gives z* z^m v0 = (1 - q^(2m)) z^(m-1) v0 by induction.
TEST(Fock, DiscRecursionOracle)
{
    for (int m = 0; m <= 6; ++m) {
        const Scalar want = Scalar(1) - Scalar::q(2 * m);
        EXPECT_EQ(eigenvalue_on(build_y(1, 1), Partition({m})), want) << m;
        const FockVector zm = on_vacuum(z(1, 1, 1).pow(static_cast<unsigned>(m)), 1);
        const FockVector lowered = fock_apply(zs(1, 1, 1), zm);
        if (m == 0) {
            EXPECT_TRUE(lowered.is_zero());
        } else {
            EXPECT_EQ(lowered, want * on_vacuum(z(1, 1, 1).pow(static_cast<unsigned>(m - 1)), 1));
        }
    }
}

TEST(FockProperty, ModuleStructureAndReference)
{
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 2; ++n) {
        const auto alg = algebra(AlgebraKind::pol(n));
        for (int i = 0; i < 20; ++i) {
            const NcPoly f = alg->normal_form(random_combination(*alg, 2, 3, rng));
            const NcPoly g = alg->normal_form(random_combination(*alg, 2, 3, rng));
            const FockVector v = on_vacuum(alg->normal_form(random_combination(*alg, 2, 2, rng)), n);
            EXPECT_EQ(fock_apply(f * g, v), fock_apply(f, fock_apply(g, v)));
            EXPECT_EQ(fock_apply(f, v), fock_apply_reference(f, v));
        }
    }
}

TEST(FockProperty, StarIsAdjoint)
{
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 2; ++n) {
        const auto alg = algebra(AlgebraKind::pol(n));
        for (int i = 0; i < 15; ++i) {
            const NcPoly f = alg->normal_form(random_combination(*alg, 2, 2, rng));
            const FockVector v = on_vacuum(alg->normal_form(random_combination(*alg, 2, 2, rng)), n);
            const FockVector w = on_vacuum(alg->normal_form(random_combination(*alg, 2, 2, rng)), n);
            EXPECT_EQ(inner_product(fock_apply(f, v), w), inner_product(v, fock_apply(apply_involution(Involution::StarPol, f), w)));
        }
    }
}

TEST(Gram, PositiveLeadingMinorsAtHalf)
{
    for (int n = 1; n <= 2; ++n) {
        for (int d = 0; d <= 3; ++d) {
            const auto gram = gram_matrix(n, d);
            std::vector<std::vector<Rational>> at(gram.size());
            for (std::size_t i = 0; i < gram.size(); ++i) {
                for (const auto& s : gram[i]) {
                    at[i].push_back(eval_at(s, Rational(1, 2)));
                }
            }
            for (const auto& m : leading_principal_minors(at)) {
                EXPECT_GT(m, Rational(0)) << n << "," << d;
            }
        }
    }
}

TEST(Gram, DeterminantOracle)
{
    EXPECT_EQ(determinant({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}), Rational(5));
    EXPECT_EQ(determinant({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}), Rational(-1));
    EXPECT_EQ(determinant({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), Rational(0));
    const auto minors = leading_principal_minors({{Rational(1, 2), Rational(0)}, {Rational(0), Rational(3)}});
    EXPECT_EQ(minors, (std::vector<Rational>{Rational(1, 2), Rational(3, 2)}));
}
