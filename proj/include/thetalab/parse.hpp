// Literal parsing shared by the registry and the CLI. All parsers consume the
// whole string or throw UsageError.
#pragma once

#include "thetalab/core.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace thetalab {

inline double parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw UsageError("cannot parse number '" + std::string(s) + "'");
    return v;
}

inline std::int64_t parse_int(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError("cannot parse integer '" + std::string(s) + "'");
    return v;
}

/// "a+bi", "a-bi", "a", "bi", "i", "-i". Exponents like 1e-3 are fine.
inline Complex parse_complex(std::string_view s) {
    if (s.empty()) throw UsageError("empty complex literal");
    if (s.back() != 'i') return {parse_double(s), 0.0};
    const std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t);
    };
    try {
        if (split == std::string_view::npos) return {0.0, imag_part(body)};
        return {parse_double(body.substr(0, split)), imag_part(body.substr(split))};
    } catch (const UsageError&) {
        throw UsageError("cannot parse complex literal '" + std::string(s) + "' (expected a+bi)");
    }
}

/// "p/q", an integer, or a terminating decimal such as "0.25".
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw UsageError("empty rational literal");
    const auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        const std::int64_t den = parse_int(s.substr(slash + 1));
        if (den == 0) throw UsageError("zero denominator in '" + std::string(s) + "'");
        return Rational(parse_int(s.substr(0, slash)), den);
    }
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(s));
    const std::string_view frac = s.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string_view::npos)
        throw UsageError("cannot parse rational '" + std::string(s) + "'");
    std::int64_t den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    std::string digits(s.substr(0, dot));
    const bool negative = !digits.empty() && digits.front() == '-';
    const std::int64_t whole = (digits.empty() || digits == "-" || digits == "+") ? 0 : parse_int(digits);
    const std::int64_t part = parse_int(frac);
    const std::int64_t mag = (whole < 0 ? -whole : whole) * den + part;
    return Rational(negative ? -mag : mag, den);
}

} // namespace thetalab
