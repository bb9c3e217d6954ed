#include <gtest/gtest.h>

#include "qlambda/qlambda.hpp"

using namespace qlambda;

namespace {
const auto kResum = SummationPolicy{}.with_mode(SummationMode::BinomialResummation);
}

TEST(BetaQ, ZerothValue) {
    const Rational q(1, 2), lam(3);
    const DeformParams<Rational> p(q, lam);
    EXPECT_EQ(beta_q(0, p), (1 - q) / (1 - lam * q));
}

TEST(BetaQ, FirstValueAtMinusOne) {
    const DeformParams<Rational> p(Rational(1, 2), RootOfUnity(2, 1));
    EXPECT_EQ(beta_q(1, p), Rational(-14, 15));
    EXPECT_EQ(big_b_q(1, p), Rational(-2, 3));
}

TEST(BigBQ, ZerothValueVanishes) {
    const DeformParams<Rational> p(Rational(1, 2), RootOfUnity(1, 0));
    EXPECT_EQ(big_b_q(0, p), Rational(0));
}

TEST(EulerQ, ZerothValue) {
    for (const Rational& lam : {Rational(1), Rational(2, 3), Rational(-4)}) {
        const Rational q(1, 3);
        EXPECT_EQ(euler_q(0, DeformParams<Rational>(q, lam)), (1 + q) / (1 + lam));
    }
}

TEST(GenocchiQ, FirstValueAtLambdaOne) {
    const DeformParams<Rational> p(Rational(1, 2), RootOfUnity(1, 0));
    EXPECT_EQ(genocchi_q(0, p), Rational(0));
    EXPECT_EQ(genocchi_q(1, p), Rational(3, 4));
}

TEST(DCEulerQ, ZerothValueAtLambdaOne) {
    const DeformParams<Rational> p(Rational(1, 2), RootOfUnity(1, 0));
    EXPECT_EQ(dc_euler_q(0, p), Rational(1));
}

TEST(QFamilies, ExactAndFloatBackendsAgree) {
    const Rational q(1, 2);
    for (const auto& root : {RootOfUnity(1, 0), RootOfUnity(2, 1)})
        for (auto fam : {QFamily::BetaQ, QFamily::BigBQ, QFamily::EulerQ, QFamily::GenocchiQ, QFamily::DCEulerQ})
            for (unsigned n = 0; n <= 8; ++n) {
                Rational exact;
                try {
                    exact = family_value(fam, n, DeformParams<Rational>(q, root));
                } catch (const PoleError&) {
                    continue;
                }
                const Complex approx = family_value(fam, n, DeformParams<Complex>(Complex(0.5), root));
                EXPECT_NEAR(std::abs(approx - exact.get_d()), 0.0, 1e-12 * (1 + std::abs(exact.get_d())))
                    << to_string(fam) << " " << n;
            }
}

TEST(QFamilies, CyclotomicMatchesComplex) {
    const Rational q(1, 3);
    const RootOfUnity root(3, 1);
    for (unsigned n = 0; n <= 6; ++n) {
        const Cyclotomic exact = euler_q(n, DeformParams<Cyclotomic>(Cyclotomic(q), root), 2.0);
        const Complex approx = euler_q(n, DeformParams<Complex>(Complex(1.0 / 3.0), root), 2.0);
        EXPECT_NEAR(std::abs(to_complex(exact) - approx), 0.0, 1e-12);
    }
}

TEST(QFamilies, ClosedAndSeriesModesAgree) {
    for (double q : {0.3, 0.5, 0.7})
        for (const auto& root : {RootOfUnity(3, 1), RootOfUnity(4, 1), RootOfUnity(6, 1)})
            for (auto fam : {QFamily::EulerQ, QFamily::GenocchiQ, QFamily::DCEulerQ})
                for (unsigned n = 0; n <= 6; ++n) {
                    const DeformParams<Complex> p(Complex(q), root);
                    const Complex c = family_value(fam, n, p, 0.5);
                    const Complex s = family_value(fam, n, p, 0.5, Mode::Series);
                    EXPECT_NEAR(std::abs(c - s), 0.0, 1e-9 * (1 + std::abs(c)));
                }
}

TEST(QFamilies, PolynomialsRejectedForNumbersOnlyFamilies) {
    const DeformParams<Complex> p(Complex(0.5), RootOfUnity(1, 0));
    EXPECT_THROW(family_value(QFamily::BetaQ, 2, p, 1.0), DomainError);
    EXPECT_THROW(family_value(QFamily::BigBQ, 2, p, 1.0), DomainError);
}

TEST(QFamilies, Poles) {
    EXPECT_THROW(euler_q(2, DeformParams<Rational>(Rational(1, 2), Rational(-1))), PoleError);
    EXPECT_THROW(beta_q(2, DeformParams<Rational>(Rational(1, 2), Rational(2))), PoleError);
}

TEST(Identities, BoundaryRelation) {
    for (double q : {0.3, 0.7})
        for (unsigned n = 0; n <= 8; ++n)
            for (double x : {0.0, 0.5, 2.0})
                EXPECT_LT(check_boundary(n, DeformParams<Complex>(Complex(q), RootOfUnity(4, 1)), x), 1e-25);
    EXPECT_EQ(check_boundary(5, DeformParams<Rational>(Rational(2, 7), Rational(3)), 4.0), 0.0);
}

TEST(Identities, Distribution) {
    for (unsigned d : {1u, 3u, 5u})
        for (unsigned n = 0; n <= 6; ++n)
            // (x+a)/d is rounded to double before it reaches q^x
            EXPECT_LT(check_distribution(n, DeformParams<Complex>(Complex(0.5), RootOfUnity(4, 1)), 0.25, d), 1e-13);
    EXPECT_EQ(check_distribution(3, DeformParams<Rational>(Rational(1, 2), Rational(1)), 0.0, 1), 0.0);
    EXPECT_THROW(check_distribution(1, DeformParams<Complex>(Complex(0.5), RootOfUnity(4, 1)), 0.0, 2), DomainError);
}

TEST(Identities, Addition) {
    for (unsigned n = 0; n <= 8; ++n)
        EXPECT_LT(check_addition(n, DeformParams<Complex>(Complex(0.3), RootOfUnity(6, 1)), 1.5), 1e-25);
    EXPECT_EQ(check_addition(4, DeformParams<Rational>(Rational(1, 3), Rational(5)), 2.0), 0.0);
}

TEST(Identities, AlternatingSumNeedsLambdaPowerAwayFromOne) {
    const DeformParams<Complex> p(Complex(0.5), RootOfUnity(4, 1));
    EXPECT_LT(check_alternating_sum(3, 3, p).residual, 1e-25);
    EXPECT_GT(check_alternating_sum(3, 3, p, false).residual, 1e-3);
    const DeformParams<Rational> one(Rational(1, 2), Rational(1));
    EXPECT_EQ(check_alternating_sum(2, 5, one, false).residual, 0.0);
    EXPECT_THROW(check_alternating_sum(2, 4, one), DomainError);
}

TEST(Identities, DerivativeMatchesFiniteDifference) {
    const DeformParams<Complex> p(Complex(0.5), RootOfUnity(3, 1));
    const double x = 1.3, h = 1e-5;
    for (unsigned n = 1; n <= 5; ++n) {
        const Complex fd = (euler_q(n, p, x + h) - euler_q(n, p, x - h)) / (2 * h);
        EXPECT_NEAR(std::abs(d_dx_euler_q(n, p, x) - fd), 0.0, 1e-8);
    }
    EXPECT_THROW(d_dx_euler_q(0, p, x), DomainError);
}

TEST(QFamilies, ApproachesClassicalAsQTendsToOne) {
    const Rational q(9999, 10000);
    const auto classical_e = classical::lambda_euler(Rational(3), 4);
    for (unsigned n = 0; n <= 4; ++n) {
        const Rational v = euler_q(n, DeformParams<Rational>(q, Rational(3)));
        const double rel = std::abs(v.get_d() - classical_e[n].get_d()) / (1 + std::abs(classical_e[n].get_d()));
        EXPECT_LT(rel, 1e-2) << n;
    }
}
