// Genus-1 theta functions: rational characteristics, the four Jacobi labels,
// triple-product forms and the Dedekind eta function.
//
// Conventions:
//   nome q = e^{pi i tau} for every theta function;
//   dedekind_eta alone uses q = e^{2 pi i tau};
//   theta[a;b](u,tau) = sum_n e[ (n+a)^2 tau / 2 + (n+a)(u+b) ],  e[x] = e^{2 pi i x};
//   theta1 = -theta[1/2;1/2], theta2 = theta[1/2;0], theta3 = theta[0;0],
//   theta4 = theta[0;1/2].  With this choice theta1(u) ~ 2 q^{1/4} sin(pi u).
#pragma once

#include "thetalab/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace thetalab {

/// Genus-1 modulus, Im(tau) > 0.
class TauPoint {
public:
    TauPoint(Complex tau) : tau_(tau) { // NOLINT(google-explicit-constructor)
        if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
            throw DomainError("Im(tau) must be positive");
    }

    Complex value() const { return tau_; }
    double im() const { return tau_.imag(); }
    /// q = e^{pi i tau}.
    Complex nome() const { return std::exp(pi * I * tau_); }

    TauPoint scaled(double k) const { return TauPoint(k * tau_); }

private:
    Complex tau_;
};

/// Rational theta characteristic (alpha; beta).
struct CharPair {
    Rational alpha{0};
    Rational beta{0};

    friend bool operator==(const CharPair&, const CharPair&) = default;
};

inline std::string to_string(const CharPair& ch) {
    return "[" + to_string(ch.alpha) + ";" + to_string(ch.beta) + "]";
}

namespace detail {

/// Smallest N with |q|^{(N-1)^2} e^{2 pi (N+1) |Im u|} / (1-|q|) < target, also
/// past the peak of the Gaussian so the bound dominates the tail.
inline int truncation_radius(double im_tau, double im_u_abs, double target, int cap) {
    const double log_q = -pi * im_tau;
    const double log_target = std::log(target) + std::log1p(-std::exp(log_q));
    const int start = std::max(1, static_cast<int>(std::ceil(im_u_abs / im_tau)) + 2);
    for (int n = start; n <= cap; ++n) {
        const double nm1 = n - 1.0;
        const double log_bound = log_q * nm1 * nm1 + 2.0 * pi * (n + 1.0) * im_u_abs;
        if (log_bound < log_target) return n;
    }
    throw PrecisionError("theta truncation needs more than " + std::to_string(cap) +
                         " terms (raise THETA_LAB_MAX_TERMS or loosen the tolerance)");
}

} // namespace detail

/// theta[alpha;beta](u, tau) by direct summation with an a-priori tail bound.
inline Complex theta_char_g1(const CharPair& ch, Complex u, const TauPoint& tau,
                             const Tolerance& tol = {}) {
    tol.validate();
    const int radius =
        detail::truncation_radius(tau.im(), std::abs(u.imag()), tol.sum_target(tau.im()), tol.max_terms);

    const double a = to_double(ch.alpha);
    const auto lo = static_cast<std::int64_t>(std::ceil(-radius - a));
    const auto hi = static_cast<std::int64_t>(std::floor(radius - a));
    const Complex t = tau.value();

    CompensatedSum acc;
    for (auto n = lo; n <= hi; ++n) {
        const Rational shifted = Rational(n) + ch.alpha;
        const double x = to_double(shifted);
        const Complex analytic = std::exp(pi * I * t * (x * x) + 2.0 * pi * I * x * u);
        acc += analytic * e2pi(shifted * ch.beta);
    }
    return acc.value();
}

/// Characteristic of the classical label j (1..4); theta1 additionally carries
/// a factor -1, see theta_j.
inline CharPair jacobi_characteristic(int j) {
    const Rational half(1, 2);
    switch (j) {
    case 1: return {half, half};
    case 2: return {half, Rational(0)};
    case 3: return {Rational(0), Rational(0)};
    case 4: return {Rational(0), half};
    default: throw UsageError("theta index must be 1..4, got " + std::to_string(j));
    }
}

/// Jacobi theta_j(u, tau), j = 1..4.
inline Complex theta_j(int j, Complex u, const TauPoint& tau, const Tolerance& tol = {}) {
    const CharPair ch = jacobi_characteristic(j);
    const Complex v = theta_char_g1(ch, u, tau, tol);
    return j == 1 ? -v : v;
}

/// Theta constant [alpha;beta](tau).
inline Complex theta_const(const CharPair& ch, const TauPoint& tau, const Tolerance& tol = {}) {
    return theta_char_g1(ch, Complex{0.0, 0.0}, tau, tol);
}

/// Partial triple product with n_factors factors, j = 2..4.
inline Complex theta_j_product(int j, Complex u, const TauPoint& tau, int n_factors) {
    if (j == 1) throw UsageError("theta_j_product does not support theta1");
    if (j < 2 || j > 4) throw UsageError("theta index must be 2..4, got " + std::to_string(j));
    if (n_factors < 1) throw UsageError("n_factors must be >= 1");

    const Complex t = tau.value();
    const Complex z2 = std::exp(2.0 * pi * I * u);
    const Complex z2inv = 1.0 / z2;
    auto qpow = [&](double k) { return std::exp(pi * I * t * k); };

    Complex prod{1.0, 0.0};
    for (int n = 1; n <= n_factors; ++n) {
        const Complex q2n = qpow(2.0 * n);
        switch (j) {
        case 4: {
            const Complex q = qpow(2.0 * n - 1.0);
            prod *= (1.0 - q2n) * (1.0 - q * z2) * (1.0 - q * z2inv);
            break;
        }
        case 3: {
            const Complex q = qpow(2.0 * n - 1.0);
            prod *= (1.0 - q2n) * (1.0 + q * z2) * (1.0 + q * z2inv);
            break;
        }
        default:
            prod *= (1.0 - q2n) * (1.0 + q2n * z2) * (1.0 + q2n * z2inv);
            break;
        }
    }
    if (j == 2) prod *= 2.0 * qpow(0.25) * std::cos(pi * u);
    return prod;
}

/// Number of product factors after which the neglected factors change the
/// product by less than the sum target (relative to an O(1) value).
inline int product_factor_count(Complex u, const TauPoint& tau, const Tolerance& tol = {}) {
    const double q = std::exp(-pi * tau.im());
    const double zmax = std::exp(2.0 * pi * std::abs(u.imag()));
    const double target = tol.sum_target(tau.im());
    for (int n = 1; n <= tol.max_terms; ++n) {
        const double tail = 3.0 * zmax * std::pow(q, 2.0 * n + 1.0) / (1.0 - q * q);
        if (tail < target && std::pow(q, 2.0 * n + 1.0) * zmax < 0.5) return n;
    }
    throw PrecisionError("product needs more than " + std::to_string(tol.max_terms) + " factors");
}

/// Result of moving u by a*tau + b.
struct ShiftResult {
    Complex phase;
    CharPair characteristic;
};

/// theta[r;s](u + a tau + b, tau) = phase * theta[r+a; s+b](u, tau).
inline ShiftResult shift_characteristic(const CharPair& ch, const Rational& a, const Rational& b,
                                        Complex u, const TauPoint& tau) {
    const double ad = to_double(a);
    const Complex analytic = std::exp(2.0 * pi * I * (-0.5 * ad * ad * tau.value() - ad * u));
    const Complex phase = analytic * e2pi(-a * (ch.beta + b));
    return {phase, CharPair{ch.alpha + a, ch.beta + b}};
}

/// A theta constant rewritten on a canonical characteristic.
struct ReducedChar {
    Complex phase;
    CharPair characteristic;
};

/// Theta constants satisfy [a+1;b] = [a;b], [a;b+k] = e[k a][a;b] and
/// [a;b] = [-a;-b] (n -> -n). Returns alpha, beta in [0,1) with the flip taken
/// when it keeps alpha and lowers beta.
inline ReducedChar reduce_characteristic(const CharPair& ch) {
    auto canonical = [](const Rational& alpha, const Rational& beta) {
        const Rational a = alpha - Rational(thetalab::floor(alpha));
        const auto k = thetalab::floor(beta);
        const Rational b = beta - Rational(k);
        return ReducedChar{e2pi(Rational(k) * a), CharPair{a, b}};
    };
    const ReducedChar direct = canonical(ch.alpha, ch.beta);
    const bool alpha_self_dual = (ch.alpha * 2).denominator() == 1;
    if (alpha_self_dual) {
        const ReducedChar flipped = canonical(-ch.alpha, -ch.beta);
        if (flipped.characteristic.beta < direct.characteristic.beta) return flipped;
    }
    return direct;
}

/// Dedekind eta(tau) = Q^{1/24} prod (1 - Q^n), Q = e^{2 pi i tau}.
inline Complex dedekind_eta(const TauPoint& tau, const Tolerance& tol = {}) {
    tol.validate();
    const Complex t = tau.value();
    const double qabs = std::exp(-2.0 * pi * tau.im());
    const double target = tol.sum_target(tau.im());

    Complex prod = std::exp(2.0 * pi * I * t / 24.0);
    for (int n = 1;; ++n) {
        if (n > tol.max_terms)
            throw PrecisionError("eta product needs more than " + std::to_string(tol.max_terms) +
                                 " factors");
        prod *= 1.0 - std::exp(2.0 * pi * I * t * static_cast<double>(n));
        if (std::pow(qabs, n + 1) / (1.0 - qabs) < target) break;
    }
    return prod;
}

} // namespace thetalab
