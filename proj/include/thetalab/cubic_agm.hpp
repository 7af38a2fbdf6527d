// Borwein cubic theta series a, b, c (one- and two-parameter), their genus-2
// theta constant representations, and the cubic / cube-sum identities.
#pragma once

#include "thetalab/core.hpp"
#include "thetalab/genus1.hpp"
#include "thetalab/genus2.hpp"
#include "thetalab/report.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>

namespace thetalab {

/// A nome carried by its logarithm so fractional powers keep one branch.
class Nome {
public:
    static Nome from_value(Complex q) {
        if (q == Complex{}) throw DomainError("nome must be nonzero");
        return Nome(std::log(q));
    }
    static Nome from_log(Complex log_q) { return Nome(log_q); }
    /// q = e^{pi i w}.
    static Nome from_modulus(const TauPoint& w) { return Nome(pi * I * w.value()); }

    Complex log() const { return log_; }
    Complex value() const { return std::exp(log_); }
    double abs() const { return std::exp(log_.real()); }
    Nome pow(double k) const { return Nome(k * log_); }
    /// w with q = e^{pi i w}.
    Complex modulus() const { return log_ / (pi * I); }

private:
    explicit Nome(Complex l) : log_(l) {}
    Complex log_;
};

enum class AbcKind { a, b, c };

inline std::string to_string(AbcKind k) {
    switch (k) {
    case AbcKind::a: return "a";
    case AbcKind::b: return "b";
    case AbcKind::c: return "c";
    }
    return "?";
}

namespace detail {

/// Smallest eigenvalue of the real exponent form, in units where the summand
/// magnitude is exp(-mu |v|^2).
inline double abc_decay(const Nome& q, const std::optional<Nome>& r) {
    const double lq = -q.log().real();
    if (!r) return 0.5 * lq;
    const double lr = -r->log().real();
    return lq - std::abs(lr);
}

inline void check_abc_domain(const Nome& q, const std::optional<Nome>& r) {
    if (!(q.abs() < 1.0)) throw DomainError("abc series need |q| < 1");
    if (r && !(abc_decay(q, r) > 0.0))
        throw DomainError("abc series need |q r| < 1 and |q / r| < 1");
}

} // namespace detail

/// Brute-force double sum over |m|, |n| <= window. Without r:
///   a = sum q^{m^2+mn+n^2}, b = sum w^{m-n} q^{...}, c = same form shifted by 1/3;
/// with r: q^{m^2+n^2} r^{2mn} and the same twists/shifts.
inline Complex abc_series(AbcKind which, const Nome& q, const std::optional<Nome>& r, int window) {
    detail::check_abc_domain(q, r);
    if (window < 1) throw UsageError("window must be positive");
    static const std::array<Complex, 3> omega_powers{
        Complex{1.0, 0.0}, Complex{-0.5, std::sqrt(3.0) / 2.0}, Complex{-0.5, -std::sqrt(3.0) / 2.0}};
    const double shift = which == AbcKind::c ? 1.0 / 3.0 : 0.0;
    const Complex lq = q.log();

    CompensatedSum acc;
    for (int m = -window; m <= window; ++m) {
        const double x = m + shift;
        for (int n = -window; n <= window; ++n) {
            const double y = n + shift;
            const Complex exponent =
                r ? (x * x + y * y) * lq + 2.0 * x * y * r->log() : (x * x + x * y + y * y) * lq;
            Complex term = std::exp(exponent);
            if (which == AbcKind::b) term *= omega_powers[((m - n) % 3 + 3) % 3];
            acc += term;
        }
    }
    return acc.value();
}

inline Complex abc_series(AbcKind which, Complex q, std::optional<Complex> r, int window) {
    std::optional<Nome> rn;
    if (r) rn = Nome::from_value(*r);
    return abc_series(which, Nome::from_value(q), rn, window);
}

/// Bound on the neglected part of abc_series at the given window.
inline double abc_tail_bound(const Nome& q, const std::optional<Nome>& r, int window) {
    detail::check_abc_domain(q, r);
    const double mu = detail::abc_decay(q, r);
    double tail = 0.0;
    for (int k = 1; k <= 400; ++k) {
        const double rad = window + k - 1.0 - 1.0 / 3.0 + 1.0;
        const double term = (8.0 * (window + k) + 8.0) * std::exp(-mu * rad * rad);
        tail += term;
        if (term < 1e-300) break;
    }
    return tail;
}

/// max(20, ceil(sqrt(ln(1/target) / mu)) + 1).
inline int default_abc_window(const Nome& q, const std::optional<Nome>& r, const Tolerance& tol = {}) {
    detail::check_abc_domain(q, r);
    const double mu = detail::abc_decay(q, r);
    const double need = std::ceil(std::sqrt(std::log(1.0 / tol.sum_target(1.0)) / mu)) + 1.0;
    if (need > tol.max_terms) throw PrecisionError("abc window exceeds truncation cap");
    return std::max(20, static_cast<int>(need));
}

inline Complex abc_value(AbcKind which, const Nome& q, const std::optional<Nome>& r,
                         const Tolerance& tol = {}) {
    return abc_series(which, q, r, default_abc_window(q, r, tol));
}

namespace detail {

inline CharQuad thirds_char(int a1, int a2, int b1, int b2) {
    return CharQuad{{Rational(a1, 3), Rational(a2, 3)}, {Rational(b1, 3), Rational(b2, 3)}};
}

} // namespace detail

/// a(q^4), b(q^4), c(q^4) against [00;00], [00;1/3 2/3], [1/3 1/3;00] on
/// cubic_period(w), q = e^{pi i w}.
inline IdentityReport abc_theta_links(Complex q_value, const Tolerance& tol = {},
                                      double report_tol = 1e-10) {
    const Nome q = Nome::from_value(q_value);
    if (!(q.abs() < 1.0)) throw DomainError("nome must satisfy |q| < 1");
    IdentityReport rep;
    rep.identity_id = "cubic.links";
    rep.params["q"] = format_complex(q_value);
    const PeriodMatrix2 tau = cubic_period(TauPoint(q.modulus()));
    const Nome q4 = q.pow(4);
    rep.add("a", abc_value(AbcKind::a, q4, std::nullopt, tol),
            theta_const_g2(detail::thirds_char(0, 0, 0, 0), tau, tol));
    rep.add("b", abc_value(AbcKind::b, q4, std::nullopt, tol),
            theta_const_g2(detail::thirds_char(0, 0, 1, 2), tau, tol));
    rep.add("c", abc_value(AbcKind::c, q4, std::nullopt, tol),
            theta_const_g2(detail::thirds_char(1, 1, 0, 0), tau, tol));
    return rep.finalize(report_tol);
}

/// a(q^4) = (theta3(q^3) theta3(q) + theta4(q^3) theta4(q)) / 2.
inline IdentityReport bba_check(Complex q_value, const Tolerance& tol = {}, double report_tol = 1e-11) {
    const Nome q = Nome::from_value(q_value);
    if (!(q.abs() < 1.0)) throw DomainError("nome must satisfy |q| < 1");
    IdentityReport rep;
    rep.identity_id = "cubic.bba";
    rep.params["q"] = format_complex(q_value);
    const TauPoint w(q.modulus());
    const TauPoint w3 = w.scaled(3);
    const Complex rhs = 0.5 * (theta_j(3, 0.0, w3, tol) * theta_j(3, 0.0, w, tol) +
                               theta_j(4, 0.0, w3, tol) * theta_j(4, 0.0, w, tol));
    rep.add("bba", abc_value(AbcKind::a, q.pow(4), std::nullopt, tol), rhs);
    return rep.finalize(report_tol);
}

/// b(q) = 3/2 a(q^3) - 1/2 a(q) and c(q) = 1/2 a(q^{1/3}) - 1/2 a(q), q in (0,1).
inline IdentityReport bbc_check(Complex q_value, const Tolerance& tol = {}, double report_tol = 1e-10) {
    if (q_value.imag() != 0.0 || !(q_value.real() > 0.0 && q_value.real() < 1.0))
        throw DomainError("bbc_check needs a real nome in (0, 1)");
    const Nome q = Nome::from_value(q_value);
    IdentityReport rep;
    rep.identity_id = "cubic.bbc";
    rep.params["q"] = format_complex(q_value);
    const Complex a1 = abc_value(AbcKind::a, q, std::nullopt, tol);
    rep.add("b", abc_value(AbcKind::b, q, std::nullopt, tol),
            1.5 * abc_value(AbcKind::a, q.pow(3), std::nullopt, tol) - 0.5 * a1);
    rep.add("c", abc_value(AbcKind::c, q, std::nullopt, tol),
            0.5 * abc_value(AbcKind::a, q.pow(1.0 / 3.0), std::nullopt, tol) - 0.5 * a1);
    return rep.finalize(report_tol);
}

/// a^3 against b^3 + c^3, one-parameter (r absent, r^2 = q) or two-parameter.
inline IdentityReport cubic_identity(Complex q_value, std::optional<Complex> r_value,
                                     const Tolerance& tol = {}, double report_tol = 1e-9) {
    const Nome q = Nome::from_value(q_value);
    std::optional<Nome> r;
    if (r_value) r = Nome::from_value(*r_value);
    IdentityReport rep;
    rep.identity_id = r ? "cubic.identity.offdiag" : "cubic.identity";
    rep.params["q"] = format_complex(q_value);
    if (r_value) rep.params["r"] = format_complex(*r_value);
    const Complex a = abc_value(AbcKind::a, q, r, tol);
    const Complex b = abc_value(AbcKind::b, q, r, tol);
    const Complex c = abc_value(AbcKind::c, q, r, tol);
    rep.add("cubic", a * a * a, b * b * b + c * c * c);
    return rep.finalize(report_tol);
}

// ---------------------------------------------------------------------------
// Cube sums over characteristics in {0, 1/3, 2/3}
// ---------------------------------------------------------------------------

/// Printed sign of the phase e(sign * 3 a'.a'').
inline constexpr int cube_sum_printed_sign = -1;

/// sum_{a',a''} e(sign 3 a' a'') [a';a'']^3 (genus 1, nine terms).
inline Complex cube_sum_rhs(const TauPoint& tau, int sign, const Tolerance& tol = {}) {
    CompensatedSum acc;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            const Complex v = theta_const({Rational(j, 3), Rational(k, 3)}, tau, tol);
            acc += e2pi(Rational(sign * j * k, 3)) * v * v * v;
        }
    return acc.value();
}

/// sum over the 81 characteristics, lexicographic in (a'1, a'2, a''1, a''2).
inline Complex cube_sum_rhs(const PeriodMatrix2& tau, int sign, const Tolerance& tol = {}) {
    CompensatedSum acc;
    for (int a1 = 0; a1 < 3; ++a1)
        for (int a2 = 0; a2 < 3; ++a2)
            for (int b1 = 0; b1 < 3; ++b1)
                for (int b2 = 0; b2 < 3; ++b2) {
                    const Complex v = theta_const_g2(detail::thirds_char(a1, a2, b1, b2), tau, tol);
                    acc += e2pi(Rational(sign * (a1 * b1 + a2 * b2), 3)) * v * v * v;
                }
    return acc.value();
}

/// 3 [0;0]^3 against the nine-term phased cube sum (printed phase).
inline IdentityReport cube_sum_identity(const TauPoint& tau, const Tolerance& tol = {},
                                        double report_tol = 1e-10) {
    IdentityReport rep;
    rep.identity_id = "thetaR3.g1";
    rep.params["tau"] = format_complex(tau.value());
    const Complex t = theta_const({Rational(0), Rational(0)}, tau, tol);
    const Complex lhs = 3.0 * t * t * t;
    rep.add("cube_sum", lhs, cube_sum_rhs(tau, cube_sum_printed_sign, tol));
    rep.diagnostics["terms"] = "9";
    rep.diagnostics["conjugate_phase_residual"] =
        format_double(std::abs(lhs - cube_sum_rhs(tau, -cube_sum_printed_sign, tol)), "%.3e");
    return rep.finalize(report_tol);
}

/// 9 [00;00]^3 against the 81-term phased cube sum (printed phase).
inline IdentityReport cube_sum_identity(const PeriodMatrix2& tau, const Tolerance& tol = {},
                                        double report_tol = 1e-8) {
    IdentityReport rep;
    rep.identity_id = "thetaR3.g2";
    rep.params["t11"] = format_complex(tau.t11());
    rep.params["t12"] = format_complex(tau.t12());
    rep.params["t22"] = format_complex(tau.t22());
    const Complex t = theta_const_g2(detail::thirds_char(0, 0, 0, 0), tau, tol);
    const Complex lhs = 9.0 * t * t * t;
    rep.add("cube_sum", lhs, cube_sum_rhs(tau, cube_sum_printed_sign, tol));
    rep.diagnostics["terms"] = "81";
    rep.diagnostics["conjugate_phase_residual"] =
        format_double(std::abs(lhs - cube_sum_rhs(tau, -cube_sum_printed_sign, tol)), "%.3e");
    return rep.finalize(report_tol);
}

/// Dispatch on genus: 1 takes tau, 2 takes a period matrix.
inline IdentityReport cube_sum_identity(int genus, Complex tau11, Complex tau12, Complex tau22,
                                        const Tolerance& tol = {}) {
    if (genus == 1) return cube_sum_identity(TauPoint(tau11), tol);
    if (genus == 2) return cube_sum_identity(PeriodMatrix2(tau11, tau12, tau22), tol);
    throw UsageError("genus must be 1 or 2");
}

} // namespace thetalab
