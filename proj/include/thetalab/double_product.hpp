// Products of two genus-1 theta functions written as sums of genus-2 theta
// functions on the symmetric period matrix [[w1+w2, w1-w2], [w1-w2, w1+w2]],
// the inverse relations, tau -> 2 tau duplication, and the general splitting
// of genus-2 constants into genus-1 products.
#pragma once

#include "thetalab/core.hpp"
#include "thetalab/genus1.hpp"
#include "thetalab/genus2.hpp"
#include "thetalab/report.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>

namespace thetalab {

/// Pair of values for the two sides of an identity.
struct SidePair {
    Complex lhs;
    Complex rhs;
    double residual() const { return std::abs(lhs - rhs); }
};

enum class ProductKind { k33, k44, k22, k11 };

inline std::string to_string(ProductKind k) {
    switch (k) {
    case ProductKind::k33: return "33";
    case ProductKind::k44: return "44";
    case ProductKind::k22: return "22";
    case ProductKind::k11: return "11";
    }
    return "?";
}

inline int jacobi_label(ProductKind k) {
    switch (k) {
    case ProductKind::k33: return 3;
    case ProductKind::k44: return 4;
    case ProductKind::k22: return 2;
    case ProductKind::k11: return 1;
    }
    return 0;
}

namespace detail {

inline CharQuad half_char(int a1_halves, int a2_halves) {
    return CharQuad{{Rational(a1_halves, 2), Rational(a2_halves, 2)}, {Rational(0), Rational(0)}};
}

/// Genus-2 values at zeta = (x+y, x-y) for the characteristics (00;00),
/// (1/2 1/2;00), (0 1/2;00), (1/2 0;00).
struct Genus2Quartet {
    Complex c00, c11, c01, c10;
};

inline Genus2Quartet genus2_quartet(Complex x, Complex y, const SymmetricTau& st,
                                    const Tolerance& tol) {
    const PeriodMatrix2 tau = st.matrix();
    const Vec2 zeta{x + y, x - y};
    return {theta_char_g2(half_char(0, 0), zeta, tau, tol),
            theta_char_g2(half_char(1, 1), zeta, tau, tol),
            theta_char_g2(half_char(0, 1), zeta, tau, tol),
            theta_char_g2(half_char(1, 0), zeta, tau, tol)};
}

} // namespace detail

/// theta_j(x,w1) theta_j(y,w2) against (00;00) +/- (1/2 1/2;00) for j = 3, 4
/// and (0 1/2;00) +/- (1/2 0;00) for j = 2, 1.
inline SidePair double_product_split(ProductKind kind, Complex x, Complex y, const TauPoint& w1,
                                     const TauPoint& w2, const Tolerance& tol = {}) {
    const int j = jacobi_label(kind);
    const Complex lhs = theta_j(j, x, w1, tol) * theta_j(j, y, w2, tol);
    const auto g = detail::genus2_quartet(x, y, symmetric_tau_from_w(w1, w2), tol);
    Complex rhs;
    switch (kind) {
    case ProductKind::k33: rhs = g.c00 + g.c11; break;
    case ProductKind::k44: rhs = g.c00 - g.c11; break;
    case ProductKind::k22: rhs = g.c01 + g.c10; break;
    case ProductKind::k11: rhs = g.c01 - g.c10; break;
    }
    return {lhs, rhs};
}

enum class Genus2Char { g2_00, g2_halfhalf, g2_0half, g2_half0 };

inline std::string to_string(Genus2Char c) {
    switch (c) {
    case Genus2Char::g2_00: return "00";
    case Genus2Char::g2_halfhalf: return "halfhalf";
    case Genus2Char::g2_0half: return "0half";
    case Genus2Char::g2_half0: return "half0";
    }
    return "?";
}

inline CharQuad characteristic_of(Genus2Char c) {
    switch (c) {
    case Genus2Char::g2_00: return detail::half_char(0, 0);
    case Genus2Char::g2_halfhalf: return detail::half_char(1, 1);
    case Genus2Char::g2_0half: return detail::half_char(0, 1);
    case Genus2Char::g2_half0: return detail::half_char(1, 0);
    }
    return {};
}

/// Genus-2 value (lhs) against half the sum/difference of two genus-1 products.
inline SidePair inverse_combine(Genus2Char which, Complex x, Complex y, const TauPoint& w1,
                                const TauPoint& w2, const Tolerance& tol = {}) {
    const SymmetricTau st = symmetric_tau_from_w(w1, w2);
    const Complex lhs = theta_char_g2(characteristic_of(which), Vec2{x + y, x - y}, st.matrix(), tol);
    auto prod = [&](int j) { return theta_j(j, x, w1, tol) * theta_j(j, y, w2, tol); };
    Complex rhs;
    switch (which) {
    case Genus2Char::g2_00: rhs = 0.5 * (prod(3) + prod(4)); break;
    case Genus2Char::g2_halfhalf: rhs = 0.5 * (prod(3) - prod(4)); break;
    case Genus2Char::g2_0half: rhs = 0.5 * (prod(2) + prod(1)); break;
    case Genus2Char::g2_half0: rhs = 0.5 * (prod(2) - prod(1)); break;
    }
    return {lhs, rhs};
}

/// Genus-1 tau -> 2 tau formulas (w1 = w2 = w).
inline SidePair duplication(ProductKind kind, Complex x, Complex y, const TauPoint& w,
                            const Tolerance& tol = {}) {
    const int j = jacobi_label(kind);
    const Complex lhs = theta_j(j, x, w, tol) * theta_j(j, y, w, tol);
    const TauPoint w2 = w.scaled(2);
    const Complex s3 = theta_j(3, x + y, w2, tol), d3 = theta_j(3, x - y, w2, tol);
    const Complex s2 = theta_j(2, x + y, w2, tol), d2 = theta_j(2, x - y, w2, tol);
    Complex rhs;
    switch (kind) {
    case ProductKind::k33: rhs = s3 * d3 + s2 * d2; break;
    case ProductKind::k44: rhs = s3 * d3 - s2 * d2; break;
    case ProductKind::k22: rhs = s3 * d2 + s2 * d3; break;
    case ProductKind::k11: rhs = s3 * d2 - s2 * d3; break;
    }
    return {lhs, rhs};
}

/// theta4(u,tau) theta3(u,tau) = theta4(2u,2tau) theta4(0,2tau), also routed
/// through the genus-2 split with x = u + 1/2, y = u, w1 = w2 = tau.
inline IdentityReport landen_from_double(Complex u, const TauPoint& tau, const Tolerance& tol = {},
                                         double report_tol = 1e-10) {
    IdentityReport rep;
    rep.identity_id = "dp.landen";
    rep.params["u"] = format_complex(u);
    rep.params["tau"] = format_complex(tau.value());
    const Complex lhs = theta_j(4, u, tau, tol) * theta_j(3, u, tau, tol);
    const TauPoint t2 = tau.scaled(2);
    rep.add("landen", lhs, theta_j(4, 2.0 * u, t2, tol) * theta_j(4, 0.0, t2, tol));
    const SidePair via = double_product_split(ProductKind::k44, u + 0.5, u, tau, tau, tol);
    rep.add("via_genus2", lhs, via.rhs);
    return rep.finalize(report_tol);
}

/// Genus-2 constant [a1 a2; b1 b2](q, r) on [[tau0,tau1],[tau1,tau0]]
/// (q = e^{pi i tau0}, r = e^{pi i tau1}) against
///   [A; B+](q1)[D; B-](q2) + [A+1/2; B+](q1)[D+1/2; B-](q2),
/// A = (a1+a2)/2, D = (a1-a2)/2, B+- = b1 +- b2, q1 = (qr)^2, q2 = (q/r)^2.
inline SidePair general_char_split(const std::array<Rational, 2>& alpha,
                                   const std::array<Rational, 2>& beta, Complex q_nome,
                                   Complex r_nome, const Tolerance& tol = {}) {
    const SymmetricTau st = SymmetricTau::from_nomes(q_nome, r_nome);
    const Complex lhs = theta_const_g2(CharQuad{alpha, beta}, st.matrix(), tol);

    const TauPoint t1(2.0 * (st.tau0() + st.tau1()));
    const TauPoint t2(2.0 * (st.tau0() - st.tau1()));
    const Rational sum_a = (alpha[0] + alpha[1]) / 2, diff_a = (alpha[0] - alpha[1]) / 2;
    const Rational sum_b = beta[0] + beta[1], diff_b = beta[0] - beta[1];
    const Rational half(1, 2);
    const Complex even = theta_const({sum_a, sum_b}, t1, tol) * theta_const({diff_a, diff_b}, t2, tol);
    const Complex odd =
        theta_const({sum_a + half, sum_b}, t1, tol) * theta_const({diff_a + half, diff_b}, t2, tol);
    return {lhs, even + odd};
}

/// Characteristic equalities [1/2 1/2;00] = [1/2 0;00] = [0 1/2;00] on the
/// cubic period matrix, plus an exact check of the lattice bijection
/// (m, n) = (j + k, -j - 1) on |j|, |k| <= window.
inline IdentityReport cubic_char_equality(const TauPoint& w, const Tolerance& tol = {},
                                          double report_tol = 1e-11, int window = 12) {
    IdentityReport rep;
    rep.identity_id = "dp.cubic_chars";
    rep.params["w"] = format_complex(w.value());
    const PeriodMatrix2 tau = cubic_period(w);
    const Complex hh = theta_const_g2(detail::half_char(1, 1), tau, tol);
    const Complex h0 = theta_const_g2(detail::half_char(1, 0), tau, tol);
    const Complex zh = theta_const_g2(detail::half_char(0, 1), tau, tol);
    rep.add("halfhalf_vs_half0", hh, h0);
    rep.add("half0_vs_0half", h0, zh);
    rep.add("halfhalf_vs_0half", hh, zh);

    // 4[(m+1/2)^2 + (m+1/2)(n+1/2) + (n+1/2)^2] and 4[(j+1/2)^2 + (j+1/2)k + k^2]
    // in integers.
    auto form_halfhalf = [](std::int64_t m, std::int64_t n) {
        const std::int64_t a = 2 * m + 1, b = 2 * n + 1;
        return a * a + a * b + b * b;
    };
    auto form_half0 = [](std::int64_t j, std::int64_t k) {
        const std::int64_t a = 2 * j + 1, b = 2 * k;
        return a * a + a * b + b * b;
    };
    std::int64_t mismatches = 0, checked = 0;
    for (std::int64_t j = -window; j <= window; ++j)
        for (std::int64_t k = -window; k <= window; ++k) {
            const std::int64_t m = j + k, n = -j - 1;
            const bool inverse_ok = (-n - 1 == j) && (m + n + 1 == k);
            if (!inverse_ok || form_halfhalf(m, n) != form_half0(j, k)) ++mismatches;
            ++checked;
        }
    rep.add("bijection_exact", Side{std::to_string(checked) + " pairs"},
            Side{std::to_string(checked - mismatches) + " matched"},
            mismatches == 0 ? 0.0 : static_cast<double>(mismatches));
    rep.diagnostics["bijection_window"] = std::to_string(window);
    rep.diagnostics["bijection_exact"] = mismatches == 0 ? "true" : "false";
    return rep.finalize(report_tol);
}

} // namespace thetalab
