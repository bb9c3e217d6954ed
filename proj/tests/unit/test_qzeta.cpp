#include <gtest/gtest.h>

#include "qlambda/qlambda.hpp"

using namespace qlambda;

TEST(Lerch, AtZeroArgumentGivesFirstTerm) {
    EXPECT_NEAR(std::abs(classical_lerch(Complex(0.0), Complex(2.0), 3.0) - 1.0 / 9.0), 0.0, 1e-15);
}

TEST(Lerch, GeometricAndArithmeticoGeometric) {
    EXPECT_NEAR(std::abs(classical_lerch(Complex(0.5), Complex(0.0), 1.0) - 2.0), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(classical_lerch(Complex(0.5), Complex(-1.0), 1.0) - 4.0), 0.0, 1e-10);
}

TEST(Lerch, HalfArgumentAtOneGivesLogarithm) {
    EXPECT_NEAR(std::abs(classical_lerch(Complex(0.5), Complex(1.0), 1.0) - 2 * std::log(2.0)), 0.0, 1e-10);
}

TEST(Lerch, Errors) {
    EXPECT_THROW(classical_lerch(Complex(1.0), Complex(2.0), 1.0), OutOfScopeError);
    EXPECT_THROW(classical_lerch(Complex(0.0, -1.0), Complex(2.0), 1.0), OutOfScopeError);
    EXPECT_THROW(classical_lerch(Complex(0.5), Complex(2.0), 0.0), DomainError);
}

TEST(QZetaFirst, SpecialValueAtZero) {
    EXPECT_NEAR(std::abs(zeta_q_first(Complex(-1.0), Complex(0.0), Complex(0.5)) + 1.0 / 15.0), 0.0, 1e-10);
}

TEST(QZetaSecond, SpecialValueAtZero) {
    EXPECT_NEAR(std::abs(zeta_q_second(Complex(-1.0), Complex(0.0), Complex(0.5)) + 1.0 / 3.0), 0.0, 1e-10);
}

TEST(QZetaFirst, PoleAtOne) {
    EXPECT_THROW(zeta_q_first(Complex(1.0), Complex(1.0), Complex(0.5)), PoleError);
}

TEST(QZeta, NegativeIntegersMatchClosedForms) {
    for (const auto& root : {RootOfUnity(2, 1), RootOfUnity(3, 1), RootOfUnity(4, 1)})
        for (unsigned k = 1; k <= 6; ++k) {
            const DeformParams<Complex> p(Complex(0.5), root);
            const Complex s(1.0 - k);
            const auto first = zeta_special_value(SpecialKind::First, k, p);
            const auto second = zeta_special_value(SpecialKind::Second, k, p);
            EXPECT_NEAR(std::abs(zeta_q_first(p.lambda, s, p.q) - first.series_value), 0.0, 1e-9) << k;
            EXPECT_NEAR(std::abs(zeta_q_second(p.lambda, s, p.q) - second.series_value), 0.0, 1e-9) << k;
        }
}

TEST(QZeta, FirstIndexSeriesStartsAtOne) {
    const DeformParams<Rational> p(Rational(1, 2), Rational(-1));
    const auto sv = zeta_special_value(SpecialKind::Second, 1, p);
    EXPECT_EQ(sv.series_value, sv.closed_value - 1);
    const auto sv2 = zeta_special_value(SpecialKind::Second, 2, p);
    EXPECT_EQ(sv2.series_value, sv2.closed_value);
    EXPECT_THROW(zeta_special_value(SpecialKind::First, 0, p), DomainError);
}

TEST(HurwitzEuler, NegativeIntegersGiveEulerPolynomials) {
    for (double x : {0.0, 0.5, 1.0})
        for (unsigned k = 1; k <= 6; ++k) {
            const DeformParams<Complex> p(Complex(0.4), RootOfUnity(3, 1));
            const Complex z = zeta_q_hurwitz_euler(p.lambda, Complex(1.0 - k), 0.4, x);
            EXPECT_NEAR(std::abs(z - euler_q(k - 1, p, x)), 0.0, 1e-10);
        }
}

TEST(ZetaQuery, DispatchesByKind) {
    ZetaQuery z;
    z.kind = ZetaKind::QSecond;
    z.lambda = Complex(-1.0);
    EXPECT_NEAR(std::abs(evaluate(z) + 1.0 / 3.0), 0.0, 1e-10);
    z.kind = ZetaKind::QHurwitzEuler;
    z.q = Complex(0.5, 0.1);
    EXPECT_THROW(evaluate(z), DomainError);
}
