// Exact truncated Laurent series in q^{1/D} (optionally times z^{j/E}) with
// big-integer coefficients, product expansions of the theta/eta families and
// formal order-by-order verification of product identities.
#pragma once

#include "thetalab/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace thetalab {

using BigInt = boost::multiprecision::cpp_int;

/// Identity that cannot be expressed with integer coefficients at this layer.
class UnsupportedIdentity : public UsageError {
public:
    using UsageError::UsageError;
};

/// Truncated series sum c_{i,j} q^{i/D} z^{j/E}; every coefficient with
/// q-exponent below order/D is known, nothing at or above it is stored.
class TruncatedSeries {
public:
    using Key = std::pair<std::int64_t, std::int64_t>; // (q numerator, z numerator)

    TruncatedSeries(std::int64_t order, std::int64_t q_den = 1, std::int64_t z_den = 1)
        : q_den_(q_den), z_den_(z_den), order_(order) {
        if (q_den < 1 || z_den < 1) throw UsageError("series denominators must be positive");
    }

    /// c q^{q_num/D} z^{z_num/E} truncated at order/D.
    static TruncatedSeries monomial(BigInt c, std::int64_t q_num, std::int64_t z_num,
                                    std::int64_t order, std::int64_t q_den = 1,
                                    std::int64_t z_den = 1) {
        TruncatedSeries s(order, q_den, z_den);
        s.add_term(q_num, z_num, std::move(c));
        return s;
    }

    static TruncatedSeries one(std::int64_t order, std::int64_t q_den = 1) {
        return monomial(1, 0, 0, order, q_den);
    }

    /// 1 + sign * q^{q_num/D} z^{z_num/E}.
    static TruncatedSeries binomial(int sign, std::int64_t q_num, std::int64_t z_num,
                                    std::int64_t order, std::int64_t q_den = 1,
                                    std::int64_t z_den = 1) {
        TruncatedSeries s = one(order, q_den);
        s.z_den_ = z_den;
        s.add_term(q_num, z_num, BigInt(sign));
        return s;
    }

    std::int64_t q_den() const { return q_den_; }
    std::int64_t z_den() const { return z_den_; }
    std::int64_t order() const { return order_; }
    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_univariate() const {
        for (const auto& [k, c] : terms_)
            if (k.second != 0) return false;
        return true;
    }

    BigInt coefficient(std::int64_t q_num, std::int64_t z_num = 0) const {
        const auto it = terms_.find({q_num, z_num});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Smallest q numerator present; order() for the zero series.
    std::int64_t min_exponent() const {
        return terms_.empty() ? order_ : terms_.begin()->first.first;
    }

    void add_term(std::int64_t q_num, std::int64_t z_num, const BigInt& c) {
        if (q_num >= order_ || c == 0) return;
        auto [it, inserted] = terms_.try_emplace({q_num, z_num}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Same series on the finer lattice q^{1/q_den}, z^{1/z_den}.
    TruncatedSeries refined(std::int64_t q_den, std::int64_t z_den) const {
        if (q_den % q_den_ != 0 || z_den % z_den_ != 0)
            throw UsageError("refinement must be a multiple of the current denominators");
        const std::int64_t fq = q_den / q_den_, fz = z_den / z_den_;
        TruncatedSeries out(order_ * fq, q_den, z_den);
        for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first * fq, k.second * fz}, c);
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combine(a, b, 1);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combine(a, b, -1);
    }
    TruncatedSeries operator-() const {
        TruncatedSeries out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }

    /// Order of the product is min(O1 + m2, O2 + m1).
    friend TruncatedSeries operator*(const TruncatedSeries& a0, const TruncatedSeries& b0) {
        const auto [a, b] = common(a0, b0);
        const std::int64_t order =
            std::min(a.order_ + b.min_exponent(), b.order_ + a.min_exponent());
        TruncatedSeries out(order, a.q_den_, a.z_den_);
        for (const auto& [ka, ca] : a.terms_) {
            if (ka.first + b.min_exponent() >= order) break;
            for (const auto& [kb, cb] : b.terms_) {
                const std::int64_t e = ka.first + kb.first;
                if (e >= order) break;
                out.add_term(e, ka.second + kb.second, ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

    friend TruncatedSeries operator*(const BigInt& k, const TruncatedSeries& s) {
        TruncatedSeries out(s.order_, s.q_den_, s.z_den_);
        for (const auto& [key, c] : s.terms_) out.add_term(key.first, key.second, k * c);
        return out;
    }

    /// Inverse of a univariate series whose lowest term is +-q^{e}.
    TruncatedSeries inverse() const {
        if (terms_.empty() || !is_univariate())
            throw UsageError("inverse needs a nonzero univariate series");
        const std::int64_t e0 = min_exponent();
        const BigInt lead = terms_.begin()->second;
        if (lead != 1 && lead != -1) throw UsageError("inverse needs a unit leading coefficient");
        const std::int64_t len = order_ - e0; // known coefficients of the shifted series
        std::vector<BigInt> a(static_cast<std::size_t>(len)), b(static_cast<std::size_t>(len));
        for (const auto& [k, c] : terms_) a[static_cast<std::size_t>(k.first - e0)] = c;
        for (std::int64_t k = 0; k < len; ++k) {
            BigInt acc = k == 0 ? BigInt(1) : BigInt(0);
            for (std::int64_t i = 1; i <= k; ++i)
                if (a[i] != 0) acc -= a[i] * b[k - i];
            b[k] = lead * acc;
        }
        TruncatedSeries out(order_ - 2 * e0, q_den_, z_den_);
        for (std::int64_t k = 0; k < len; ++k) out.add_term(k - e0, 0, b[k]);
        return out;
    }

    /// Non-negative powers by repeated squaring; negative powers go through inverse().
    TruncatedSeries pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        if (n == 0) {
            TruncatedSeries unit = one(order_, q_den_);
            unit.z_den_ = z_den_;
            return unit;
        }
        std::optional<TruncatedSeries> result;
        TruncatedSeries base = *this;
        while (n > 0) {
            if (n & 1) result = result ? *result * base : base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return *result;
    }

    /// Numeric value at q, z with q^{x} = exp(x log q).
    Complex evaluate(Complex q, Complex z = {1.0, 0.0}) const {
        const Complex lq = std::log(q), lz = std::log(z);
        CompensatedSum acc;
        for (const auto& [k, c] : terms_) {
            const double x = static_cast<double>(k.first) / static_cast<double>(q_den_);
            const double y = static_cast<double>(k.second) / static_cast<double>(z_den_);
            acc += c.convert_to<double>() * std::exp(x * lq + y * lz);
        }
        return acc.value();
    }

    /// "exponent_numerator/D<TAB>coefficient" rows sorted by exponent; bivariate
    /// series carry an extra "z_numerator/E" column before the coefficient.
    std::string to_table() const {
        std::ostringstream os;
        const bool bivariate = !is_univariate();
        for (const auto& [k, c] : terms_) {
            os << k.first << '/' << q_den_ << '\t';
            if (bivariate) os << k.second << '/' << z_den_ << '\t';
            os << c << '\n';
        }
        return os.str();
    }

private:
    static std::pair<TruncatedSeries, TruncatedSeries> common(const TruncatedSeries& a,
                                                              const TruncatedSeries& b) {
        const std::int64_t d = std::lcm(a.q_den_, b.q_den_);
        const std::int64_t e = std::lcm(a.z_den_, b.z_den_);
        return {a.refined(d, e), b.refined(d, e)};
    }

    static TruncatedSeries combine(const TruncatedSeries& a0, const TruncatedSeries& b0, int sign) {
        const auto [a, b] = common(a0, b0);
        TruncatedSeries out(std::min(a.order_, b.order_), a.q_den_, a.z_den_);
        for (const auto& [k, c] : a.terms_) out.add_term(k.first, k.second, c);
        for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, sign * c);
        return out;
    }

    std::int64_t q_den_;
    std::int64_t z_den_;
    std::int64_t order_;
    std::map<Key, BigInt> terms_;
};

// ---------------------------------------------------------------------------
// Product and sum expansions
// ---------------------------------------------------------------------------

/// prod_{n>=1} (1 + sign q^{step n + offset} z^{z_exp}), exponents in q units,
/// truncated at order (q units), on the lattice q^{1/q_den}.
inline TruncatedSeries q_product(int sign, std::int64_t step, std::int64_t offset,
                                 std::int64_t z_exp, std::int64_t order, std::int64_t q_den = 1) {
    TruncatedSeries acc = TruncatedSeries::one(order * q_den, q_den);
    for (std::int64_t n = 1;; ++n) {
        const std::int64_t e = step * n + offset;
        if (e >= order) break;
        if (e <= 0) throw UsageError("product factor exponents must be positive");
        acc *= TruncatedSeries::binomial(sign, e * q_den, z_exp, order * q_den, q_den);
    }
    return acc;
}

enum class ProductFamily { theta2, theta3, theta4, theta2_z, theta3_z, theta4_z, eta_term, landen_rhs };

/// Exact expansion of a product family up to q^{order} (exclusive). The z
/// variants use z = e^{pi i u}; landen_rhs needs p.
inline TruncatedSeries expand_product(ProductFamily family, std::int64_t order, int p = 2) {
    if (order < 1) throw UsageError("order must be >= 1");
    switch (family) {
    case ProductFamily::theta3:
        return q_product(-1, 2, 0, 0, order) * q_product(1, 2, -1, 0, order).pow(2);
    case ProductFamily::theta4:
        return q_product(-1, 2, 0, 0, order) * q_product(-1, 2, -1, 0, order).pow(2);
    case ProductFamily::theta2:
        // 2 q^{1/4} prod (1 - q^{2n})(1 + q^{2n})^2 on the q^{1/4} lattice
        return TruncatedSeries::monomial(2, 1, 0, order * 4, 4) *
               q_product(-1, 2, 0, 0, order, 4) * q_product(1, 2, 0, 0, order, 4).pow(2);
    case ProductFamily::theta3_z:
    case ProductFamily::theta4_z: {
        const int s = family == ProductFamily::theta3_z ? 1 : -1;
        return q_product(-1, 2, 0, 0, order) * q_product(s, 2, -1, 2, order) *
               q_product(s, 2, -1, -2, order);
    }
    case ProductFamily::theta2_z: {
        TruncatedSeries lead = TruncatedSeries::monomial(1, 1, 1, order * 4, 4) +
                               TruncatedSeries::monomial(1, 1, -1, order * 4, 4);
        return lead * q_product(-1, 2, 0, 0, order, 4) * q_product(1, 2, 0, 2, order, 4) *
               q_product(1, 2, 0, -2, order, 4);
    }
    case ProductFamily::eta_term:
        return TruncatedSeries::monomial(1, 1, 0, order * 24, 24) * q_product(-1, 1, 0, 0, order, 24);
    case ProductFamily::landen_rhs:
        if (p < 1) throw UsageError("landen_rhs needs p >= 1");
        return q_product(-1, 2 * p, 0, 0, order) * q_product(-1, 2, 0, 0, order).pow(-p);
    }
    throw UsageError("unknown product family");
}

/// Sum form of theta_label(scale u, scale tau) (label 2, 3, 4): q^{scale n^2}
/// (or q^{scale (n+1/2)^2}) times z^{2 scale n} (or z^{scale (2n+1)}) when with_z.
inline TruncatedSeries theta_sum_series(int label, std::int64_t order, bool with_z, int scale = 1) {
    if (label < 2 || label > 4) throw UsageError("theta_sum_series supports labels 2..4");
    if (label == 2) {
        TruncatedSeries s(order * 4, 4);
        for (std::int64_t n = -1;; ++n) {
            // exponent scale (n + 1/2)^2 = scale (2n+1)^2 / 4
            const std::int64_t k = 2 * n + 1;
            if (scale * k * k >= order * 4 && k > 0) break;
            if (k < 0) continue;
            const std::int64_t zpos = with_z ? scale * k : 0;
            s.add_term(scale * k * k, zpos, 1);
            s.add_term(scale * k * k, -zpos, 1);
        }
        return s;
    }
    TruncatedSeries s(order);
    for (std::int64_t n = 0; scale * n * n < order; ++n) {
        const BigInt c = (label == 4 && n % 2 == 1) ? BigInt(-1) : BigInt(1);
        const std::int64_t zpos = with_z ? 2 * scale * n : 0;
        s.add_term(scale * n * n, zpos, c);
        if (n != 0) s.add_term(scale * n * n, -zpos, c);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Formal verification
// ---------------------------------------------------------------------------

enum class FormalIdentity { agm2_cancel, theta_13, quartic, landen_nd, modular3 };

struct FormalSpec {
    FormalIdentity identity;
    int p = 2;
};

inline std::string to_string(const FormalSpec& f) {
    switch (f.identity) {
    case FormalIdentity::agm2_cancel: return "AGM2_cancel";
    case FormalIdentity::theta_13: return "theta_13";
    case FormalIdentity::quartic: return "quartic";
    case FormalIdentity::landen_nd: return "landen_ND(" + std::to_string(f.p) + ")";
    case FormalIdentity::modular3: return "modular3";
    }
    return "?";
}

/// Parses "AGM2_cancel", "theta_13", "quartic", "modular3", "landen_ND(p)".
inline FormalSpec parse_formal_identity(const std::string& name) {
    if (name == "AGM2_cancel") return {FormalIdentity::agm2_cancel};
    if (name == "theta_13") return {FormalIdentity::theta_13};
    if (name == "quartic") return {FormalIdentity::quartic};
    if (name == "modular3") return {FormalIdentity::modular3};
    if (name.rfind("landen_ND(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(10, name.size() - 11);
        std::size_t used = 0;
        int p = 0;
        try {
            p = std::stoi(inner, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != inner.size() || p < 1) throw UsageError("bad order in " + name);
        return {FormalIdentity::landen_nd, p};
    }
    for (const char* numeric_only : {"ratio", "fk", "thetaR3", "landens3", "cubic"})
        if (name.rfind(numeric_only, 0) == 0)
            throw UnsupportedIdentity(name + " needs non-integer (cyclotomic or real) coefficients; "
                                             "use the numeric backend");
    throw UsageError("unknown formal identity: " + name);
}

struct FormalResult {
    bool passed = false;
    /// Lowest exponent q^{first_mismatch} with a nonzero difference.
    std::optional<Rational> first_mismatch;
    /// Number of nonzero coefficients of lhs - rhs below the order.
    std::size_t mismatches = 0;
    std::int64_t order = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
};

struct FormalSides {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
};

/// Both sides of a formal identity, expanded to q^{order}.
inline FormalSides formal_sides(const FormalSpec& spec, std::int64_t order) {
    switch (spec.identity) {
    case FormalIdentity::agm2_cancel:
        return {q_product(-1, 4, 0, 0, order).pow(2) * q_product(-1, 4, -2, 0, order).pow(2),
                q_product(-1, 2, 0, 0, order).pow(2)};
    case FormalIdentity::theta_13: {
        const TruncatedSeries plus =
            (q_product(1, 2, -1, 0, order) * q_product(1, 6, -3, 0, order)).pow(2);
        const TruncatedSeries minus =
            (q_product(-1, 2, -1, 0, order) * q_product(-1, 6, -3, 0, order)).pow(2);
        const TruncatedSeries right =
            TruncatedSeries::monomial(4, 1, 0, order) *
            (q_product(1, 2, 0, 0, order) * q_product(1, 6, 0, 0, order)).pow(2);
        return {plus - minus, right};
    }
    case FormalIdentity::quartic:
        return {expand_product(ProductFamily::theta3, order).pow(4),
                expand_product(ProductFamily::theta4, order).pow(4) +
                    expand_product(ProductFamily::theta2, order).pow(4)};
    case FormalIdentity::modular3: {
        auto pair = [&](int label) {
            return theta_sum_series(label, order, false, 1) * theta_sum_series(label, order, false, 3);
        };
        return {pair(4) + pair(2), pair(3)};
    }
    case FormalIdentity::landen_nd: {
        const int p = spec.p;
        if (p < 2) throw UsageError("landen_ND needs p >= 2");
        const TruncatedSeries euler_p = q_product(-1, 2, 0, 0, order).pow(p);
        const TruncatedSeries numerator = theta_sum_series(4, order, true, p);
        TruncatedSeries denominator(order);
        if (p == 2) {
            denominator = theta_sum_series(4, order, true) * theta_sum_series(3, order, true);
        } else {
            // prod_k (1 - w^k y) = 1 - y^p with y = q^{2n-1} z^{+-2}
            denominator = euler_p * q_product(-1, 2 * p, -p, 2 * p, order) *
                          q_product(-1, 2 * p, -p, -2 * p, order);
        }
        return {numerator * euler_p, denominator * q_product(-1, 2 * p, 0, 0, order)};
    }
    }
    throw UsageError("unknown formal identity");
}

inline constexpr std::int64_t default_formal_order_cap = 400;

/// Passes iff every coefficient of lhs - rhs below the common order vanishes.
inline FormalResult formal_verify(const FormalSpec& spec, std::int64_t order,
                                  std::int64_t order_cap = default_formal_order_cap) {
    if (order < 1) throw UsageError("order must be >= 1");
    if (order > order_cap)
        throw UsageError("order " + std::to_string(order) + " exceeds the cap " +
                         std::to_string(order_cap));
    const FormalSides sides = formal_sides(spec, order);
    const TruncatedSeries diff = sides.lhs - sides.rhs;
    FormalResult res;
    res.order = order;
    res.lhs_terms = sides.lhs.terms().size();
    res.rhs_terms = sides.rhs.terms().size();
    res.passed = diff.is_zero();
    res.mismatches = diff.terms().size();
    if (!res.passed)
        res.first_mismatch = Rational(diff.min_exponent(), diff.q_den());
    return res;
}

inline FormalResult formal_verify(const std::string& name, std::int64_t order,
                                  std::int64_t order_cap = default_formal_order_cap) {
    return formal_verify(parse_formal_identity(name), order, order_cap);
}

} // namespace thetalab
