#pragma once

#include "thetalab/core.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace thetalab {

/// One side of an identity: a number, or a digest string for series checks.
using Side = std::variant<Complex, std::string>;

/// A single lhs/rhs comparison inside a report.
struct Comparison {
    std::string label;
    Side lhs;
    Side rhs;
    double residual = 0.0;
};

using ParamMap = std::map<std::string, std::string>;

/// Outcome of checking one identity at one parameter point. The headline
/// residual is the largest comparison residual; passed <=> residual < tolerance.
struct IdentityReport {
    std::string identity_id;
    ParamMap params;
    std::vector<Comparison> comparisons;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Extra measured quantities (phases, factors, relative residuals, ...).
    std::map<std::string, std::string> diagnostics;
    /// Non-empty when evaluation threw; the report then counts as failed.
    std::string error;

    void add(std::string label, Side lhs, Side rhs, double residual) {
        comparisons.push_back({std::move(label), std::move(lhs), std::move(rhs), residual});
    }

    void add(std::string label, Complex lhs, Complex rhs) {
        add(std::move(label), Side{lhs}, Side{rhs}, std::abs(lhs - rhs));
    }

    /// Recomputes the headline residual and verdict.
    IdentityReport& finalize(double tol) {
        tolerance = tol;
        residual = 0.0;
        for (const auto& c : comparisons) residual = std::max(residual, c.residual);
        passed = error.empty() && !comparisons.empty() && std::isfinite(residual) &&
                 residual < tolerance;
        return *this;
    }

    /// The comparison carrying the headline residual.
    const Comparison* headline() const {
        const Comparison* best = nullptr;
        for (const auto& c : comparisons)
            if (!best || c.residual > best->residual) best = &c;
        return best;
    }
};

inline std::string format_double(double x, const char* fmt = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

/// "re+imi" / "re-imi".
inline std::string format_complex(Complex z) {
    std::string s = format_double(z.real(), "%.12g");
    const double im = z.imag();
    s += (im < 0 || std::signbit(im)) ? "-" : "+";
    s += format_double(std::abs(im), "%.12g");
    s += "i";
    return s;
}

} // namespace thetalab
