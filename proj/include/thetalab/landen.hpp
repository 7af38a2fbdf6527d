// Landen-type transformations of order p, their eta-quotient constants, the
// parity variant, degree-p ratio identities, Farkas-Kra type quotients, the
// degree-3 modular equation and the Gauss AGM step.
#pragma once

#include "thetalab/core.hpp"
#include "thetalab/genus1.hpp"
#include "thetalab/report.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace thetalab {

namespace detail {

inline void require_order(int p) {
    if (p < 1) throw UsageError("order p must be a positive integer");
}

inline Complex checked_factor(Complex v, double eps, int index) {
    if (std::abs(v) < 1e3 * eps)
        throw NearZeroDivision("denominator factor k=" + std::to_string(index) + " is near zero",
                               index);
    return v;
}

} // namespace detail

/// theta4(p u, p tau) / prod_{k<p} theta4(u + k/p, tau).
inline Complex landen_ratio(int p, Complex u, const TauPoint& tau, const Tolerance& tol = {}) {
    detail::require_order(p);
    Complex den{1.0, 0.0};
    for (int k = 0; k < p; ++k)
        den *= detail::checked_factor(theta_j(4, u + double(k) / p, tau, tol), tol.eps, k);
    return theta_j(4, double(p) * u, tau.scaled(p), tol) / den;
}

/// Direct product prod_n (1 - q^{2pn}) / (1 - q^{2n})^p, q = e^{pi i tau}.
inline Complex landen_rhs_product(int p, const TauPoint& tau, const Tolerance& tol = {}) {
    detail::require_order(p);
    const Complex t = tau.value();
    const double q2 = std::exp(-2.0 * pi * tau.im());
    Complex prod{1.0, 0.0};
    for (int n = 1;; ++n) {
        if (n > tol.max_terms) throw PrecisionError("Landen product exceeds truncation cap");
        const Complex x = std::exp(2.0 * pi * I * t * double(n));
        const Complex xp = std::exp(2.0 * pi * I * t * double(p) * double(n));
        prod *= (1.0 - xp) / std::pow(1.0 - x, p);
        if (p * std::pow(q2, n + 1) / (1.0 - q2) < tol.sum_target(tau.im())) break;
    }
    return prod;
}

/// eta(p tau) / eta(tau)^p; eta uses its own nome e^{2 pi i tau}.
inline Complex landen_rhs_eta(int p, const TauPoint& tau, const Tolerance& tol = {}) {
    detail::require_order(p);
    return dedekind_eta(tau.scaled(p), tol) / std::pow(dedekind_eta(tau, tol), p);
}

/// The Landen constant, cross-checked against the eta quotient.
inline Complex landen_rhs(int p, const TauPoint& tau, const Tolerance& tol = {}) {
    const Complex direct = landen_rhs_product(p, tau, tol);
    const Complex via_eta = landen_rhs_eta(p, tau, tol);
    if (std::abs(direct - via_eta) > 10.0 * tol.eps * std::max(1.0, std::abs(direct)))
        throw PrecisionError("Landen constant: product and eta quotient disagree");
    return direct;
}

/// theta3(pu,p tau) (odd p) or theta4(pu,p tau) (even p) over prod theta3(u + k/p, tau).
inline Complex landen_parity(int p, Complex u, const TauPoint& tau, const Tolerance& tol = {}) {
    detail::require_order(p);
    Complex den{1.0, 0.0};
    for (int k = 0; k < p; ++k)
        den *= detail::checked_factor(theta_j(3, u + double(k) / p, tau, tol), tol.eps, k);
    const int numerator_label = (p % 2 == 1) ? 3 : 4;
    return theta_j(numerator_label, double(p) * u, tau.scaled(p), tol) / den;
}

/// Landen ratio at one u against both routes to the constant.
inline IdentityReport landen_check(int p, Complex u, const TauPoint& tau, const Tolerance& tol = {},
                                   double report_tol = 1e-10) {
    IdentityReport rep;
    rep.identity_id = "landen.p" + std::to_string(p);
    rep.params["u"] = format_complex(u);
    rep.params["tau"] = format_complex(tau.value());
    const Complex ratio = landen_ratio(p, u, tau, tol);
    rep.add("product_constant", ratio, landen_rhs_product(p, tau, tol));
    rep.add("eta_constant", ratio, landen_rhs_eta(p, tau, tol));
    return rep.finalize(report_tol);
}

inline IdentityReport landen_parity_check(int p, Complex u, const TauPoint& tau,
                                          const Tolerance& tol = {}, double report_tol = 1e-10) {
    IdentityReport rep;
    rep.identity_id = "landen.parity.p" + std::to_string(p);
    rep.params["u"] = format_complex(u);
    rep.params["tau"] = format_complex(tau.value());
    rep.add("parity", landen_parity(p, u, tau, tol), landen_rhs(p, tau, tol));
    return rep.finalize(report_tol);
}

/// Deterministic u-samples in [0,1) x [0, Im tau / 2) (Halton bases 2 and 3),
/// kept at least 0.05 away from every zero zero_offset - k/p mod the lattice.
/// zero_offset is tau/2 for theta4 denominators and (1+tau)/2 for theta3.
inline std::vector<Complex> landen_u_samples(const TauPoint& tau, int p, Complex zero_offset,
                                             int count) {
    auto halton = [](int index, int base) {
        double f = 1.0, r = 0.0;
        for (int i = index; i > 0; i /= base) {
            f /= base;
            r += f * (i % base);
        }
        return r;
    };
    std::vector<Complex> out;
    const Complex t = tau.value();
    for (int i = 1; static_cast<int>(out.size()) < count && i < 100000; ++i) {
        const Complex u{halton(i, 2), halton(i, 3) * 0.5 * tau.im()};
        bool clear = true;
        for (int k = 0; k < p && clear; ++k)
            for (int m = -2; m <= 2 && clear; ++m)
                for (int n = -1; n <= 1 && clear; ++n) {
                    const Complex zero = zero_offset - double(k) / p + double(m) + double(n) * t;
                    if (std::abs(u - zero) < 0.05) clear = false;
                }
        if (clear) out.push_back(u);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree-3 product lines
// ---------------------------------------------------------------------------

/// Factor printed in front of the theta2 line of the degree-3 Landen formula.
inline constexpr double landens3_theta2_printed_factor = 4.0;

/// One line of the degree-3 Landen formula at u = 0 (label 2, 3 or 4).
inline IdentityReport landens3_line(int label, const TauPoint& tau, const Tolerance& tol = {}) {
    if (label < 2 || label > 4) throw UsageError("degree-3 Landen line must be 2, 3 or 4");
    IdentityReport rep;
    rep.identity_id = "landens3.theta" + std::to_string(label);
    rep.params["tau"] = format_complex(tau.value());

    const Complex constant = landen_rhs(3, tau, tol);
    Complex den{1.0, 0.0};
    for (int k = 0; k < 3; ++k) den *= theta_j(label, Complex(k / 3.0), tau, tol);
    const Complex num = theta_j(label, 0.0, tau.scaled(3), tol);
    const double factor = label == 2 ? landens3_theta2_printed_factor : 1.0;
    rep.add("theta" + std::to_string(label) + "_line", factor * num / den, constant);
    if (label == 2) {
        const Complex measured = constant * den / num;
        rep.diagnostics["printed_factor"] = format_double(factor, "%g");
        rep.diagnostics["measured_factor"] = format_complex(measured);
        rep.diagnostics["factor_discrepancy"] =
            std::abs(measured - factor) > 1e-6 ? "true" : "false";
    }
    return rep;
}

/// All three lines (theta4, theta3, theta2) of the degree-3 formula.
inline IdentityReport landens3_theta2(const TauPoint& tau, const Tolerance& tol = {},
                                      double report_tol = 1e-10) {
    IdentityReport rep;
    rep.identity_id = "landens3";
    rep.params["tau"] = format_complex(tau.value());
    for (int label : {4, 3, 2}) {
        IdentityReport line = landens3_line(label, tau, tol);
        rep.comparisons.push_back(line.comparisons.front());
        for (auto& [k, v] : line.diagnostics) rep.diagnostics[k] = v;
    }
    return rep.finalize(report_tol);
}

// ---------------------------------------------------------------------------
// Ratio identities
// ---------------------------------------------------------------------------

namespace detail {

/// theta constant evaluated through its canonical characteristic.
inline Complex reduced_const(const CharPair& ch, const TauPoint& tau, const Tolerance& tol) {
    const ReducedChar r = reduce_characteristic(ch);
    return r.phase * theta_const(r.characteristic, tau, tol);
}

} // namespace detail

/// theta4(0, p tau) / theta3(0, p tau) against the product of p theta ratios
/// and the compact squared quotient of [0; j/2p] and [0; k/p] constants.
inline IdentityReport ratio_ell(int p, const TauPoint& tau, const Tolerance& tol = {},
                                double report_tol = 1e-10) {
    if (p != 3 && p != 5 && p != 7) throw UsageError("ratio_ell supports p = 3, 5, 7");
    IdentityReport rep;
    rep.identity_id = "ratio.p" + std::to_string(p);
    rep.params["tau"] = format_complex(tau.value());
    rep.params["p"] = std::to_string(p);

    const Complex direct = theta_j(4, 0.0, tau.scaled(p), tol) / theta_j(3, 0.0, tau.scaled(p), tol);

    Complex landen_form{1.0, 0.0};
    Complex char_form{1.0, 0.0};
    for (int k = 0; k < p; ++k) {
        landen_form *= theta_j(4, Complex(double(k) / p), tau, tol) /
                       theta_j(3, Complex(double(k) / p), tau, tol);
        const CharPair num{Rational(0), Rational(1, 2) + Rational(k, p)};
        const CharPair den{Rational(0), Rational(k, p)};
        char_form *= detail::reduced_const(num, tau, tol) / detail::reduced_const(den, tau, tol);
    }

    Complex inner{1.0, 0.0};
    for (int j = 1; j < p; j += 2)
        inner *= detail::reduced_const({Rational(0), Rational(j, 2 * p)}, tau, tol);
    for (int k = 1; k <= (p - 1) / 2; ++k)
        inner /= detail::reduced_const({Rational(0), Rational(k, p)}, tau, tol);
    const Complex compact = detail::reduced_const({Rational(0), Rational(1, 2)}, tau, tol) /
                            detail::reduced_const({Rational(0), Rational(1)}, tau, tol) * inner *
                            inner;

    rep.add("landen_form", direct, landen_form);
    rep.add("characteristic_form", direct, char_form);
    rep.add("compact_form", direct, compact);
    return rep.finalize(report_tol);
}

enum class FkCase { p5, p7_13, p7_35 };

inline std::string to_string(FkCase c) {
    switch (c) {
    case FkCase::p5: return "p5";
    case FkCase::p7_13: return "p7_13";
    case FkCase::p7_35: return "p7_35";
    }
    return "?";
}

/// [a1/p; 1](p tau) / [a2/p; 1](p tau) against e^{4 pi i/p} times the quotient
/// of p constants [a/p; odd/p](tau). The printed phase is used as is; the
/// measured phase is reported alongside.
inline IdentityReport fk_ratio(FkCase which, const TauPoint& tau, const Tolerance& tol = {},
                               double report_tol = 1e-9) {
    int p = 5, a1 = 1, a2 = 3;
    if (which == FkCase::p7_13) p = 7, a1 = 1, a2 = 3;
    if (which == FkCase::p7_35) p = 7, a1 = 3, a2 = 5;

    IdentityReport rep;
    rep.identity_id = "fk." + to_string(which);
    rep.params["tau"] = format_complex(tau.value());

    const TauPoint ptau = tau.scaled(p);
    const Complex lhs_den = theta_const({Rational(a2, p), Rational(1)}, ptau, tol);
    if (std::abs(lhs_den) < 1e3 * tol.eps)
        throw NearZeroDivision("[" + std::to_string(a2) + "/" + std::to_string(p) +
                                   ";1](p tau) is near zero",
                               0);
    const Complex lhs = theta_const({Rational(a1, p), Rational(1)}, ptau, tol) / lhs_den;

    Complex quotient{1.0, 0.0};
    for (int j = 1; j < 2 * p; j += 2) {
        const CharPair den{Rational(a2, p), Rational(j, p)};
        const Complex d = theta_const(den, tau, tol);
        if (std::abs(d) < 1e3 * tol.eps)
            throw NearZeroDivision(to_string(den) + " is near zero", j);
        quotient *= theta_const({Rational(a1, p), Rational(j, p)}, tau, tol) / d;
    }
    const Complex printed_phase = e2pi(Rational(2, p));
    rep.add("printed_phase", lhs, printed_phase * quotient);

    const Complex measured = lhs / quotient;
    double turns = std::arg(measured) / (2.0 * pi);
    if (turns < 0) turns += 1.0;
    const long nearest = std::lround(turns * p) % p;
    rep.diagnostics["printed_phase"] = "e[" + to_string(Rational(2, p)) + "]";
    rep.diagnostics["measured_phase"] = format_complex(measured);
    rep.diagnostics["measured_phase_turns"] = format_double(turns, "%.12f");
    rep.diagnostics["measured_phase_nearest"] = "e[" + to_string(Rational(nearest, p)) + "]";
    rep.diagnostics["measured_modulus"] = format_double(std::abs(measured), "%.12f");
    rep.diagnostics["phase_discrepancy"] =
        std::abs(measured - printed_phase) > 1e-6 ? "true" : "false";
    return rep.finalize(report_tol);
}

/// theta4(0,tau)theta4(0,3tau) + theta2(0,tau)theta2(0,3tau) - theta3(0,tau)theta3(0,3tau).
inline IdentityReport modular3_residual(const TauPoint& tau, const Tolerance& tol = {},
                                        double report_tol = 1e-11) {
    IdentityReport rep;
    rep.identity_id = "modular3";
    rep.params["tau"] = format_complex(tau.value());
    const TauPoint t3 = tau.scaled(3);
    auto pair = [&](int j) { return theta_j(j, 0.0, tau, tol) * theta_j(j, 0.0, t3, tol); };
    rep.add("modular3", pair(4) + pair(2), pair(3));
    return rep.finalize(report_tol);
}

// ---------------------------------------------------------------------------
// Gauss AGM
// ---------------------------------------------------------------------------

struct AgmStep {
    Complex arithmetic;
    Complex geometric;
    /// True when both inputs are real and positive, where the principal root
    /// is the right branch.
    bool branch_verified;
};

/// A = (a + b)/2, B = sqrt(a b), principal branch.
inline AgmStep gauss_agm_step(Complex a, Complex b) {
    if (a == Complex{} || b == Complex{}) throw DomainError("AGM inputs must be nonzero");
    const bool real_positive = a.imag() == 0.0 && b.imag() == 0.0 && a.real() > 0 && b.real() > 0;
    return {0.5 * (a + b), std::sqrt(a * b), real_positive};
}

/// Iterates the AGM from (theta3^2, theta4^2)(tau) and compares each step with
/// (theta3^2, theta4^2)(2^k tau).
inline IdentityReport agm_theta_check(const TauPoint& tau, int steps = 1, const Tolerance& tol = {},
                                      double report_tol = 1e-11) {
    IdentityReport rep;
    rep.identity_id = "agm.step";
    rep.params["tau"] = format_complex(tau.value());
    rep.params["steps"] = std::to_string(steps);
    Complex a = std::pow(theta_j(3, 0.0, tau, tol), 2);
    Complex b = std::pow(theta_j(4, 0.0, tau, tol), 2);
    bool verified = true;
    for (int k = 1; k <= steps; ++k) {
        const AgmStep s = gauss_agm_step(a, b);
        verified = verified && s.branch_verified;
        const TauPoint tk = tau.scaled(std::ldexp(1.0, k));
        rep.add("A" + std::to_string(k), s.arithmetic, std::pow(theta_j(3, 0.0, tk, tol), 2));
        rep.add("B" + std::to_string(k), s.geometric, std::pow(theta_j(4, 0.0, tk, tol), 2));
        a = s.arithmetic;
        b = s.geometric;
    }
    rep.diagnostics["branch_verified"] = verified ? "true" : "false";
    return rep.finalize(report_tol);
}

/// prod(1+q^{2n-1})^2(1+q^{6n-3})^2 - prod(1-q^{2n-1})^2(1-q^{6n-3})^2
///   = 4 q prod(1+q^{2n})^2(1+q^{6n})^2, checked numerically for a nome q.
inline IdentityReport theta13_product_check(Complex q, const Tolerance& tol = {},
                                            double report_tol = 1e-10) {
    if (!(std::abs(q) < 1.0)) throw DomainError("nome must satisfy |q| < 1");
    IdentityReport rep;
    rep.identity_id = "numeric.theta13";
    rep.params["q"] = format_complex(q);
    Complex plus{1.0, 0.0}, minus{1.0, 0.0}, right{1.0, 0.0};
    const double qa = std::abs(q);
    for (int n = 1; n <= tol.max_terms; ++n) {
        const Complex o1 = std::pow(q, 2 * n - 1), o3 = std::pow(q, 6 * n - 3);
        const Complex e1 = std::pow(q, 2 * n), e3 = std::pow(q, 6 * n);
        plus *= std::pow((1.0 + o1) * (1.0 + o3), 2);
        minus *= std::pow((1.0 - o1) * (1.0 - o3), 2);
        right *= std::pow((1.0 + e1) * (1.0 + e3), 2);
        if (8.0 * std::pow(qa, 2 * n + 1) / (1.0 - qa) < tol.sum_target(1.0)) break;
    }
    const Complex lhs = plus - minus;
    const Complex rhs = 4.0 * q * right;
    rep.add("theta13", lhs, rhs);
    const double scale = std::max({std::abs(plus), std::abs(minus), std::abs(rhs)});
    rep.diagnostics["relative_residual"] = format_double(std::abs(lhs - rhs) / scale, "%.3e");
    return rep.finalize(report_tol);
}

} // namespace thetalab
