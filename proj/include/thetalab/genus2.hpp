// Genus-2 theta functions with rational characteristics.
//
//   theta[a1 a2; b1 b2](zeta, tau) = sum_{m - a in Z^2} e[ m.tau.m / 2 + m.(zeta + b) ]
//
// No normalisation prefactor is applied.
#pragma once

#include "thetalab/core.hpp"
#include "thetalab/genus1.hpp"

#include <array>
#include <cmath>
#include <string>

namespace thetalab {

/// Symmetric 2x2 period matrix with positive-definite imaginary part.
class PeriodMatrix2 {
public:
    PeriodMatrix2(Complex t11, Complex t12, Complex t22) : t11_(t11), t12_(t12), t22_(t22) {
        const double a = t11.imag(), b = t12.imag(), c = t22.imag();
        if (!(a > 0.0) || !(a * c - b * b > 0.0))
            throw DomainError("Im(tau) of the period matrix must be positive definite");
    }

    Complex t11() const { return t11_; }
    Complex t12() const { return t12_; }
    Complex t22() const { return t22_; }

    /// Smallest eigenvalue of Im(tau).
    double lambda_min() const {
        const double a = t11_.imag(), b = t12_.imag(), c = t22_.imag();
        const double mean = 0.5 * (a + c);
        const double half_gap = std::hypot(0.5 * (a - c), b);
        return mean - half_gap;
    }

    bool is_diagonal() const { return t12_ == Complex{}; }

private:
    Complex t11_, t12_, t22_;
};

using Vec2 = std::array<Complex, 2>;

struct CharQuad {
    std::array<Rational, 2> alpha{Rational(0), Rational(0)};
    std::array<Rational, 2> beta{Rational(0), Rational(0)};
};

inline std::string to_string(const CharQuad& ch) {
    return "[" + to_string(ch.alpha[0]) + " " + to_string(ch.alpha[1]) + ";" +
           to_string(ch.beta[0]) + " " + to_string(ch.beta[1]) + "]";
}

/// Period matrix [[tau0, tau1], [tau1, tau0]]; the single place where moduli
/// (w1, w2) and nome pairs (q, r) are converted.
class SymmetricTau {
public:
    SymmetricTau(Complex tau0, Complex tau1) : tau0_(tau0), tau1_(tau1) {
        if (!((tau0 + tau1).imag() > 0.0) || !((tau0 - tau1).imag() > 0.0))
            throw DomainError("Im(tau0 +/- tau1) must be positive");
    }

    /// tau0 = w1 + w2, tau1 = w1 - w2.
    static SymmetricTau from_w(const TauPoint& w1, const TauPoint& w2) {
        return {w1.value() + w2.value(), w1.value() - w2.value()};
    }

    /// q = e^{pi i tau0}, r = e^{pi i tau1}, principal logarithms.
    static SymmetricTau from_nomes(Complex q, Complex r) {
        if (q == Complex{} || r == Complex{})
            throw DomainError("nomes must be nonzero");
        if (!(std::abs(q * r) < 1.0) || !(std::abs(q / r) < 1.0))
            throw DomainError("nome pair must satisfy |q r| < 1 and |q / r| < 1");
        return {std::log(q) / (pi * I), std::log(r) / (pi * I)};
    }

    Complex tau0() const { return tau0_; }
    Complex tau1() const { return tau1_; }
    Complex w1() const { return 0.5 * (tau0_ + tau1_); }
    Complex w2() const { return 0.5 * (tau0_ - tau1_); }
    PeriodMatrix2 matrix() const { return {tau0_, tau1_, tau0_}; }

private:
    Complex tau0_, tau1_;
};

inline SymmetricTau symmetric_tau_from_w(const TauPoint& w1, const TauPoint& w2) {
    return SymmetricTau::from_w(w1, w2);
}

/// [[4w, 2w], [2w, 4w]].
inline PeriodMatrix2 cubic_period(const TauPoint& w) {
    const Complex v = w.value();
    return {4.0 * v, 2.0 * v, 4.0 * v};
}

namespace detail {

/// Half-width R of the square window |m_i| <= R. Points outside lie in rings
/// R+k-1 < |m|_inf <= R+k, each holding at most 8(R+k)+8 points bounded by
/// exp(-pi lambda r^2 + 2 pi r s) at r = R+k-1.
inline int window_radius(double lambda, double s, double target, int cap) {
    const int start = std::max(1, static_cast<int>(std::ceil(s / lambda)) + 1);
    for (int r = start; r <= cap; ++r) {
        double tail = 0.0;
        for (int k = 1; k <= 400; ++k) {
            const double rad = r + k - 1.0;
            const double term =
                (8.0 * (r + k) + 8.0) * std::exp(-pi * lambda * rad * rad + 2.0 * pi * rad * s);
            tail += term;
            if (term < 1e-30 * target) break;
        }
        if (tail < target) return r;
    }
    throw PrecisionError("genus-2 window needs radius above " + std::to_string(cap));
}

} // namespace detail

inline Complex theta_char_g2(const CharQuad& ch, const Vec2& zeta, const PeriodMatrix2& tau,
                             const Tolerance& tol = {}) {
    tol.validate();
    const double lambda = tau.lambda_min();
    const double s = std::hypot(zeta[0].imag(), zeta[1].imag());
    const int radius = detail::window_radius(lambda, s, tol.sum_target(lambda), tol.max_terms);

    const double a1 = to_double(ch.alpha[0]), a2 = to_double(ch.alpha[1]);
    const auto lo1 = static_cast<std::int64_t>(std::ceil(-radius - a1));
    const auto hi1 = static_cast<std::int64_t>(std::floor(radius - a1));
    const auto lo2 = static_cast<std::int64_t>(std::ceil(-radius - a2));
    const auto hi2 = static_cast<std::int64_t>(std::floor(radius - a2));
    const Complex t11 = tau.t11(), t12 = tau.t12(), t22 = tau.t22();

    CompensatedSum acc;
    for (auto n1 = lo1; n1 <= hi1; ++n1) {
        const Rational m1 = Rational(n1) + ch.alpha[0];
        const double x1 = to_double(m1);
        for (auto n2 = lo2; n2 <= hi2; ++n2) {
            const Rational m2 = Rational(n2) + ch.alpha[1];
            const double x2 = to_double(m2);
            const Complex quad = t11 * (x1 * x1) + 2.0 * t12 * (x1 * x2) + t22 * (x2 * x2);
            const Complex lin = x1 * zeta[0] + x2 * zeta[1];
            const Complex analytic = std::exp(pi * I * quad + 2.0 * pi * I * lin);
            acc += analytic * e2pi(m1 * ch.beta[0] + m2 * ch.beta[1]);
        }
    }
    return acc.value();
}

/// Genus-2 theta constant (zeta = 0).
inline Complex theta_const_g2(const CharQuad& ch, const PeriodMatrix2& tau,
                              const Tolerance& tol = {}) {
    return theta_char_g2(ch, Vec2{}, tau, tol);
}

} // namespace thetalab
