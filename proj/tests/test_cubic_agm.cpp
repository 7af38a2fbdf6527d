#include "oracles.hpp"
#include "thetalab/cubic_agm.hpp"
#include "thetalab/double_product.hpp"

#include <gtest/gtest.h>

using namespace thetalab;
using oracle::Sampler;

namespace {

double err(Complex a, Complex b) { return std::abs(a - b); }

Complex value(AbcKind k, Complex q) { return abc_value(k, Nome::from_value(q), std::nullopt); }

} // namespace

TEST(Nome, LogAndPowers) {
    const Nome q = Nome::from_value(Complex(0.3, 0.2));
    EXPECT_LT(err(q.value(), Complex(0.3, 0.2)), 1e-15);
    EXPECT_LT(err(q.pow(4).value(), std::pow(Complex(0.3, 0.2), 4)), 1e-15);
    EXPECT_LT(err(Nome::from_modulus(TauPoint(Complex(0, 1))).value(), std::exp(-pi)), 1e-16);
    EXPECT_THROW(Nome::from_value(0.0), DomainError);
}

TEST(AbcSeries, Limits) {
    EXPECT_LT(err(value(AbcKind::a, 1e-12), 1.0), 1e-11);
    EXPECT_LT(err(value(AbcKind::b, 1e-12), 1.0), 1e-11);
    const double q = 1e-6;
    EXPECT_LT(err(value(AbcKind::c, q) / std::cbrt(q), 3.0), 1e-5);
}

TEST(AbcSeries, MatchesOracle) {
    for (double q : {0.1, 0.2, 0.45}) {
        EXPECT_LT(err(value(AbcKind::a, q), oracle::borwein('a', q)), 1e-12);
        EXPECT_LT(err(value(AbcKind::b, q), oracle::borwein('b', q)), 1e-12);
        EXPECT_LT(err(value(AbcKind::c, q), oracle::borwein('c', q)), 1e-12);
    }
    EXPECT_LT(err(abc_series(AbcKind::b, Complex(0.2), std::nullopt, 40), oracle::borwein('b', 0.2)), 1e-13);
}

TEST(AbcSeries, TailBoundShrinks) {
    const Nome q = Nome::from_value(0.3);
    const double t10 = abc_tail_bound(q, std::nullopt, 10), t20 = abc_tail_bound(q, std::nullopt, 20);
    EXPECT_LT(t20, t10);
    EXPECT_LT(err(abc_series(AbcKind::a, q, std::nullopt, 10), abc_series(AbcKind::a, q, std::nullopt, 30)), t10);
}

TEST(AbcSeries, DomainErrors) {
    EXPECT_THROW(value(AbcKind::a, 1.0), DomainError);
    EXPECT_THROW(abc_series(AbcKind::a, Complex(0.5), Complex(0.2), 10), DomainError);
    EXPECT_THROW(abc_series(AbcKind::a, Complex(0.5), std::nullopt, 0), UsageError);
}

TEST(CubicLinks, ThetaConstantsOnCubicPeriod) {
    for (Complex q : {Complex(0.3), Complex(0.5), Complex(0.2, 0.1)}) {
        const IdentityReport r = abc_theta_links(q);
        EXPECT_TRUE(r.passed) << r.residual;
    }
}

TEST(CubicLinks, BbaAndBbc) {
    for (double q : {0.1, 0.3, 0.45}) EXPECT_LT(bba_check(q).residual, 1e-11);
    EXPECT_LT(bba_check(Complex(0.2, 0.3)).residual, 1e-11);
    for (double q : {0.2, 0.6}) EXPECT_LT(bbc_check(q).residual, 1e-10) << q;
    EXPECT_THROW(bbc_check(Complex(0.2, 0.1)), DomainError);
}

TEST(CubicIdentity, OneParameter) {
    for (double q : {0.1, 0.2, 0.3, 0.45}) {
        const IdentityReport r = cubic_identity(q, std::nullopt);
        EXPECT_TRUE(r.passed) << q << " " << r.residual;
    }
    Sampler s(101);
    for (int k = 0; k < 10; ++k) {
        const Complex q = std::polar(s.uniform(0.05, 0.5), s.uniform(-pi, pi));
        EXPECT_LT(cubic_identity(q, std::nullopt).residual, 1e-9);
    }
}

TEST(CubicIdentity, OffDiagonalDoesNotHold) {
    const IdentityReport r = cubic_identity(0.2, Complex(0.5));
    EXPECT_GT(r.residual, 1e-3);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.identity_id, "cubic.identity.offdiag");
}

TEST(TwoParameterSeries, MatchGenus2Constants) {
    // with r: a, b, c are [00;00], [00;1/3 2/3], [1/3 1/3;00] on the symmetric matrix
    Sampler s(103);
    for (int k = 0; k < 10; ++k) {
        const double q = s.uniform(0.1, 0.45);
        const double r = std::exp(s.uniform(std::log(q) * 0.8, -std::log(q) * 0.8));
        const PeriodMatrix2 m = SymmetricTau::from_nomes(q, r).matrix();
        const Complex a = abc_series(AbcKind::a, Complex(q), Complex(r), 40);
        const Complex b = abc_series(AbcKind::b, Complex(q), Complex(r), 40);
        const Complex c = abc_series(AbcKind::c, Complex(q), Complex(r), 40);
        EXPECT_LT(err(a, theta_const_g2(CharQuad{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}, m)), 1e-12);
        EXPECT_LT(err(b, theta_const_g2(CharQuad{{Rational(0), Rational(0)}, {Rational(1, 3), Rational(2, 3)}}, m)), 1e-12);
        EXPECT_LT(err(c, theta_const_g2(CharQuad{{Rational(1, 3), Rational(1, 3)}, {Rational(0), Rational(0)}}, m)), 1e-12);
        const SidePair sp = general_char_split({Rational(1, 3), Rational(1, 3)}, {Rational(0), Rational(0)}, q, r);
        EXPECT_LT(err(c, sp.rhs), 1e-11);
    }
}

TEST(TwoParameterSeries, SpecializesToOneParameter) {
    // r^2 = q turns q^{m^2+n^2} r^{2mn} into q^{m^2+mn+n^2}
    for (double q : {0.1, 0.3}) {
        const double Q = q, R = std::sqrt(q);
        for (AbcKind k : {AbcKind::a, AbcKind::b, AbcKind::c})
            EXPECT_LT(err(abc_series(k, Complex(Q), Complex(R), 40), abc_series(k, Complex(q), std::nullopt, 40)), 1e-13)
                << to_string(k);
    }
}

TEST(CubeSum, Genus1PrintedPhaseFails) {
    const IdentityReport r = cube_sum_identity(TauPoint(Complex(0, 1)));
    EXPECT_FALSE(r.passed);
    EXPECT_GT(r.residual, 1e-3);
    EXPECT_LT(std::stod(r.diagnostics.at("conjugate_phase_residual")), 1e-10);
    EXPECT_EQ(r.diagnostics.at("terms"), "9");
}

TEST(CubeSum, ConjugatePhaseHoldsProperty) {
    Sampler s(107);
    for (int k = 0; k < 10; ++k) {
        const TauPoint tau(s.tau(0.8, 1.5));
        const Complex t = theta_const({Rational(0), Rational(0)}, tau);
        EXPECT_LT(err(3.0 * t * t * t, cube_sum_rhs(tau, -cube_sum_printed_sign)), 1e-10);
    }
    const PeriodMatrix2 m = cubic_period(Complex(0, 0.8));
    const Complex t = theta_const_g2(CharQuad{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}, m);
    EXPECT_LT(err(9.0 * t * t * t, cube_sum_rhs(m, -cube_sum_printed_sign)), 1e-9);
}

TEST(CubeSum, Genus2ReportAndDispatch) {
    const IdentityReport r = cube_sum_identity(2, Complex(0.1, 1.2), Complex(0.2, 0.3), Complex(-0.1, 1.1));
    EXPECT_EQ(r.identity_id, "thetaR3.g2");
    EXPECT_EQ(r.diagnostics.at("terms"), "81");
    EXPECT_FALSE(r.passed);
    EXPECT_LT(std::stod(r.diagnostics.at("conjugate_phase_residual")), 1e-8);
    EXPECT_THROW(cube_sum_identity(3, Complex(0, 1), 0.0, Complex(0, 1)), UsageError);
}
