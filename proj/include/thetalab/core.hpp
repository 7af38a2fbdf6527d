// Scalar types, exact characteristics, errors and summation helpers shared by
// every thetalab module.
#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace thetalab {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Argument outside the mathematical domain (non-positive Im tau, |q| >= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested accuracy needs more terms than the configured hard cap.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid call (bad index, unsupported variant, malformed identifier).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A denominator factor is too close to zero to divide by.
class NearZeroDivision : public std::runtime_error {
public:
    NearZeroDivision(const std::string& what, int factor_index)
        : std::runtime_error(what), factor_index_(factor_index) {}
    int factor_index() const noexcept { return factor_index_; }

private:
    int factor_index_;
};

// ---------------------------------------------------------------------------
// Tolerance
// ---------------------------------------------------------------------------

/// Absolute error target for truncated series plus the truncation hard cap.
struct Tolerance {
    double eps = 1e-12;
    int max_terms = 10000;
    /// When set, replaces eps for moduli with Im tau < 0.3.
    std::optional<double> boundary_eps;

    Tolerance() = default;
    explicit Tolerance(double e, int cap = 10000) : eps(e), max_terms(cap) { validate(); }

    void validate() const {
        if (!(eps > 0.0 && eps < 1.0))
            throw UsageError("tolerance must satisfy 0 < eps < 1");
        if (max_terms < 1)
            throw UsageError("truncation cap must be positive");
    }

    double effective_eps(double im_tau) const {
        if (boundary_eps && im_tau < 0.3) return *boundary_eps;
        return eps;
    }

    /// Tail target for truncated sums. At the default eps or tighter the sums
    /// run to double precision so printed digits are stable.
    double sum_target(double im_tau) const {
        const double e = effective_eps(im_tau);
        return e <= 1e-12 ? 1e-17 : e / 4.0;
    }
};

// ---------------------------------------------------------------------------
// Small numeric helpers
// ---------------------------------------------------------------------------

/// e[x] = exp(2 pi i x).
inline Complex e2pi(Complex x) { return std::exp(2.0 * pi * I * x); }

/// e[r] for a rational r, reduced mod 1 before conversion.
inline Complex e2pi(const Rational& r) {
    const auto n = r.numerator() % r.denominator();
    const double frac = static_cast<double>(n) / static_cast<double>(r.denominator());
    return std::polar(1.0, 2.0 * pi * frac);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Floor of a rational as an integer.
inline std::int64_t floor(const Rational& r) {
    auto q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

/// Neumaier-compensated accumulator, applied to real and imaginary parts
/// independently.
class CompensatedSum {
public:
    void add(Complex x) {
        add_part(sum_re_, comp_re_, x.real());
        add_part(sum_im_, comp_im_, x.imag());
    }
    CompensatedSum& operator+=(Complex x) {
        add(x);
        return *this;
    }
    Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void add_part(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double sum_re_ = 0.0, comp_re_ = 0.0;
    double sum_im_ = 0.0, comp_im_ = 0.0;
};

} // namespace thetalab
