// Catalog of verifiable identities: parameter schemas, default grids,
// tolerances and expected verdicts. The CLI and the test suites iterate it.
#pragma once

#include "thetalab/core.hpp"
#include "thetalab/cubic_agm.hpp"
#include "thetalab/double_product.hpp"
#include "thetalab/genus1.hpp"
#include "thetalab/genus2.hpp"
#include "thetalab/landen.hpp"
#include "thetalab/parse.hpp"
#include "thetalab/qseries.hpp"
#include "thetalab/report.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetalab {

class UnknownIdentity : public UsageError {
public:
    using UsageError::UsageError;
};

enum class ParamType { complex, integer, rational };

inline std::string to_string(ParamType t) {
    switch (t) {
    case ParamType::complex: return "complex";
    case ParamType::integer: return "int";
    case ParamType::rational: return "rational";
    }
    return "?";
}

struct ParamSpec {
    std::string name;
    ParamType type;
    // inclusive bounds, integers only
    std::int64_t min = std::numeric_limits<std::int64_t>::min();
    std::int64_t max = std::numeric_limits<std::int64_t>::max();
};

/// Parameter name -> literal, e.g. {"tau", "0.3+1.2i"}.
using Binding = std::map<std::string, std::string>;

enum class Expectation { pass, expected_fail };
enum class Verdict { pass, fail, xfail, xpass };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::xfail: return "XFAIL";
    case Verdict::xpass: return "XPASS";
    }
    return "?";
}

/// XPASS counts as unexpected: an expected failure that passes means the
/// catalog is stale.
inline bool is_unexpected(Verdict v) { return v == Verdict::fail || v == Verdict::xpass; }

/// Typed view of one grid point.
class Args {
public:
    explicit Args(const Binding& b) : b_(b) {}
    const std::string& raw(const std::string& k) const {
        const auto it = b_.find(k);
        if (it == b_.end()) throw UsageError("missing parameter " + k);
        return it->second;
    }
    Complex complex(const std::string& k) const { return parse_complex(raw(k)); }
    TauPoint tau(const std::string& k = "tau") const { return TauPoint(complex(k)); }
    int integer(const std::string& k) const { return static_cast<int>(parse_int(raw(k))); }
    Rational rational(const std::string& k) const { return parse_rational(raw(k)); }

private:
    const Binding& b_;
};

struct RunContext {
    Tolerance numeric;
    double report_tol = 1e-10;
};

struct IdentityEntry {
    std::string id;
    std::vector<ParamSpec> schema;
    std::vector<Binding> default_grid;
    double tolerance = 1e-10;
    Expectation expected = Expectation::pass;
    /// Formula the entry checks, in plain notation.
    std::string anchor;
    std::function<IdentityReport(const Args&, const RunContext&)> run;

    bool has_param(const std::string& name) const {
        return std::any_of(schema.begin(), schema.end(),
                           [&](const ParamSpec& p) { return p.name == name; });
    }
};

struct RunOptions {
    /// Replaces the entry tolerance.
    std::optional<double> tol;
    std::optional<int> max_terms;
    /// When false, overrides naming parameters the entry lacks are skipped
    /// (used by --all); otherwise they are a schema violation.
    bool strict_overrides = true;
};

struct EntryResult {
    IdentityReport report;
    Verdict verdict = Verdict::fail;
};

inline Verdict classify(const IdentityReport& r, Expectation expected) {
    if (expected == Expectation::pass) return r.passed ? Verdict::pass : Verdict::fail;
    if (r.passed) return Verdict::xpass;
    // an expected failure still has to be a finite, error-free measurement
    return (r.error.empty() && std::isfinite(r.residual)) ? Verdict::xfail : Verdict::fail;
}

namespace detail {

/// Cartesian product of the axes, first axis slowest.
inline std::vector<Binding> grid(const std::vector<std::pair<std::string, std::vector<std::string>>>& axes) {
    std::vector<Binding> out{Binding{}};
    for (const auto& [name, values] : axes) {
        std::vector<Binding> next;
        for (const auto& b : out)
            for (const auto& v : values) {
                Binding c = b;
                c[name] = v;
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    return out;
}

inline const std::vector<std::string> tau_grid{"0+1i", "0+1.5i", "0.3+1.2i"};

inline IdentityReport pair_report(const SidePair& s, const std::string& label) {
    IdentityReport rep;
    rep.add(label, s.lhs, s.rhs);
    return rep;
}

inline IdentityReport formal_report(const FormalSpec& spec, const Args& a) {
    const std::int64_t order = a.integer("order");
    const FormalResult res = formal_verify(spec, order);
    IdentityReport rep;
    const std::string below = " terms below q^" + std::to_string(order);
    rep.add("coefficients", Side{std::to_string(res.lhs_terms) + below},
            Side{std::to_string(res.rhs_terms) + below}, static_cast<double>(res.mismatches));
    rep.diagnostics["identity"] = to_string(spec);
    if (res.first_mismatch) rep.diagnostics["first_mismatch"] = to_string(*res.first_mismatch);
    return rep;
}

inline void validate_value(const ParamSpec& p, const std::string& v) {
    switch (p.type) {
    case ParamType::complex: parse_complex(v); break;
    case ParamType::integer: {
        const std::int64_t n = parse_int(v);
        if (n < p.min || n > p.max)
            throw UsageError(v + " is outside [" + std::to_string(p.min) + ", " + std::to_string(p.max) + "]");
        break;
    }
    case ParamType::rational: parse_rational(v); break;
    }
}

} // namespace detail

class Registry {
public:
    Registry() {
        build();
        std::sort(entries_.begin(), entries_.end(),
                  [](const IdentityEntry& a, const IdentityEntry& b) { return a.id < b.id; });
        for (std::size_t k = 1; k < entries_.size(); ++k)
            if (entries_[k].id == entries_[k - 1].id)
                throw std::logic_error("duplicate registry id " + entries_[k].id);
    }

    const std::vector<IdentityEntry>& entries() const { return entries_; }

    const IdentityEntry& find(const std::string& id) const {
        const auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                                         [](const IdentityEntry& e, const std::string& k) { return e.id < k; });
        if (it == entries_.end() || it->id != id) throw UnknownIdentity("unknown identity id: " + id);
        return *it;
    }

    /// Entries whose id contains filter, ordered by id.
    std::vector<const IdentityEntry*> list(const std::string& filter = "") const {
        std::vector<const IdentityEntry*> out;
        for (const auto& e : entries_)
            if (e.id.find(filter) != std::string::npos) out.push_back(&e);
        return out;
    }

    /// Grid after overrides; duplicate points are dropped, first occurrence kept.
    std::vector<Binding> points(const IdentityEntry& e, const Binding& overrides, bool strict) const {
        for (const auto& [k, v] : overrides) {
            const auto spec = std::find_if(e.schema.begin(), e.schema.end(),
                                           [&](const ParamSpec& p) { return p.name == k; });
            if (spec == e.schema.end()) {
                if (strict) throw UsageError(e.id + " has no parameter '" + k + "'");
                continue;
            }
            try {
                detail::validate_value(*spec, v);
            } catch (const UsageError& err) {
                throw UsageError(e.id + ": parameter " + k + " must be " + to_string(spec->type) + " (" +
                                 err.what() + ")");
            }
        }
        std::vector<Binding> out;
        for (Binding b : e.default_grid) {
            for (const auto& [k, v] : overrides)
                if (e.has_param(k)) b[k] = v;
            if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
        }
        return out;
    }

    /// One result per grid point, in grid order. Points run concurrently;
    /// evaluation errors become failed reports.
    std::vector<EntryResult> run(const std::string& id, const Binding& overrides = {},
                                 const RunOptions& opt = {}) const {
        const IdentityEntry& e = find(id);
        const std::vector<Binding> pts = points(e, overrides, opt.strict_overrides);
        RunContext ctx;
        ctx.report_tol = opt.tol.value_or(e.tolerance);
        if (!(ctx.report_tol > 0.0)) throw UsageError("tolerance must be positive");
        if (opt.tol) ctx.numeric.eps = std::clamp(*opt.tol * 1e-2, 1e-16, 1e-12);
        if (opt.max_terms) ctx.numeric.max_terms = *opt.max_terms;
        ctx.numeric.validate();

        std::vector<std::future<IdentityReport>> jobs;
        jobs.reserve(pts.size());
        for (const Binding& b : pts)
            jobs.push_back(std::async(std::launch::async, [&e, &ctx, b] {
                IdentityReport rep;
                try {
                    rep = e.run(Args(b), ctx);
                } catch (const std::exception& ex) {
                    rep = IdentityReport{};
                    rep.error = ex.what();
                }
                rep.identity_id = e.id;
                rep.params = b;
                rep.finalize(ctx.report_tol);
                return rep;
            }));
        std::vector<EntryResult> out;
        out.reserve(jobs.size());
        for (auto& j : jobs) {
            EntryResult r{j.get(), Verdict::fail};
            r.verdict = classify(r.report, e.expected);
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    using Runner = std::function<IdentityReport(const Args&, const RunContext&)>;

    void add(std::string id, std::vector<ParamSpec> schema, std::vector<Binding> grid, double tol,
             std::string anchor, Runner run, Expectation expected = Expectation::pass) {
        entries_.push_back({std::move(id), std::move(schema), std::move(grid), tol, expected,
                            std::move(anchor), std::move(run)});
    }

    void build() {
        using detail::grid;
        using detail::tau_grid;
        const ParamSpec tau{"tau", ParamType::complex}, u{"u", ParamType::complex};
        const ParamSpec q{"q", ParamType::complex}, x{"x", ParamType::complex}, y{"y", ParamType::complex};
        const ParamSpec order{"order", ParamType::integer, 1, default_formal_order_cap};
        const std::vector<std::string> u_grid{"0.123+0.045i", "0.371-0.082i"};
        const std::vector<std::string> cubic_q{"0.1", "0.2", "0.3", "0.45"};

        // Landen family
        for (int p = 2; p <= 7; ++p)
            add("landen.p" + std::to_string(p), {tau, u}, grid({{"tau", tau_grid}, {"u", u_grid}}),
                p >= 7 ? 1e-9 : 1e-10,
                "theta4(pu,p tau)/prod_k theta4(u+k/p,tau) = prod_n (1-q^{2pn})/(1-q^{2n})^p = "
                "eta(p tau)/eta(tau)^p",
                [p](const Args& a, const RunContext& c) {
                    return landen_check(p, a.complex("u"), a.tau(), c.numeric);
                });
        for (int p = 2; p <= 5; ++p)
            add("landen.parity.p" + std::to_string(p), {tau, u}, grid({{"tau", tau_grid}, {"u", u_grid}}),
                1e-10,
                "theta3(pu,p tau) (odd p) or theta4(pu,p tau) (even p) over prod_k theta3(u+k/p,tau) "
                "= prod_n (1-q^{2pn})/(1-q^{2n})^p",
                [p](const Args& a, const RunContext& c) {
                    return landen_parity_check(p, a.complex("u"), a.tau(), c.numeric);
                });
        for (int label : {4, 3, 2})
            add("landens3.theta" + std::to_string(label), {tau}, grid({{"tau", tau_grid}}), 1e-10,
                label == 2 ? "4 theta2(0,3tau)/prod_k theta2(k/3,tau) = prod_n (1-q^{6n})/(1-q^{2n})^3 "
                             "(printed factor 4; measured constant is -1)"
                           : "theta" + std::to_string(label) + "(0,3tau)/prod_k theta" +
                                 std::to_string(label) + "(k/3,tau) = prod_n (1-q^{6n})/(1-q^{2n})^3",
                [label](const Args& a, const RunContext& c) {
                    return landens3_line(label, a.tau(), c.numeric);
                },
                label == 2 ? Expectation::expected_fail : Expectation::pass);

        // Ratio and Farkas-Kra quotients
        for (int p : {3, 5, 7})
            add("ratio.p" + std::to_string(p), {tau}, grid({{"tau", tau_grid}}), p >= 7 ? 1e-9 : 1e-10,
                "theta4(0,p tau)/theta3(0,p tau) = prod_k [0;1/2+k/p]/[0;k/p] = "
                "([0;1/2]/[0;1]) (prod_{j odd} [0;j/2p] / prod_{k<=(p-1)/2} [0;k/p])^2",
                [p](const Args& a, const RunContext& c) { return ratio_ell(p, a.tau(), c.numeric); });
        const std::pair<FkCase, std::string> fk_cases[] = {
            {FkCase::p5, "[1/5;1](5tau)/[3/5;1](5tau) = e^{4 pi i/5} prod_{j odd<10} [1/5;j/5]/[3/5;j/5] "
                         "(printed phase; measured phase is e^{-4 pi i/5})"},
            {FkCase::p7_13, "[1/7;1](7tau)/[3/7;1](7tau) = e^{4 pi i/7} prod_{j odd<14} [1/7;j/7]/[3/7;j/7] "
                            "(printed phase; measured phase is e^{-4 pi i/7})"},
            {FkCase::p7_35, "[3/7;1](7tau)/[5/7;1](7tau) = e^{4 pi i/7} prod_{j odd<14} [3/7;j/7]/[5/7;j/7] "
                            "(printed phase; measured phase is e^{-4 pi i/7})"}};
        for (const auto& [c, anchor] : fk_cases) {
            const FkCase which = c;
            add("fk." + to_string(which), {tau}, grid({{"tau", tau_grid}}), 1e-9, anchor,
                [which](const Args& a, const RunContext& ctx) { return fk_ratio(which, a.tau(), ctx.numeric); },
                Expectation::expected_fail);
        }

        add("modular3", {tau}, grid({{"tau", tau_grid}}), 1e-11,
            "theta4(0,tau)theta4(0,3tau) + theta2(0,tau)theta2(0,3tau) = theta3(0,tau)theta3(0,3tau)",
            [](const Args& a, const RunContext& c) { return modular3_residual(a.tau(), c.numeric); });
        add("agm.step", {tau, {"steps", ParamType::integer}}, grid({{"tau", tau_grid}, {"steps", {"3"}}}),
            1e-10,
            "((theta3^2+theta4^2)/2, theta3 theta4)(tau) = (theta3^2, theta4^2)(2tau)",
            [](const Args& a, const RunContext& c) {
                return agm_theta_check(a.tau(), a.integer("steps"), c.numeric);
            });
        add("numeric.theta13", {q}, grid({{"q", {"0.1", "0.3+0.2i", "-0.5", "0+0.7i"}}}), 1e-10,
            "prod(1+q^{2n-1})^2(1+q^{6n-3})^2 - prod(1-q^{2n-1})^2(1-q^{6n-3})^2 = "
            "4q prod(1+q^{2n})^2(1+q^{6n})^2",
            [](const Args& a, const RunContext& c) { return theta13_product_check(a.complex("q"), c.numeric); });

        // Double products
        const ParamSpec w1{"w1", ParamType::complex}, w2{"w2", ParamType::complex}, w{"w", ParamType::complex};
        const auto dp_grid = grid({{"x", {"0.13+0.05i"}},
                                   {"y", {"0.31-0.07i"}},
                                   {"w1", {"0+1i", "0.2+1.1i"}},
                                   {"w2", {"0+1.3i", "-0.1+0.9i"}}});
        for (ProductKind k : {ProductKind::k33, ProductKind::k44, ProductKind::k22, ProductKind::k11}) {
            const std::string j = std::to_string(jacobi_label(k));
            const char* sign = (k == ProductKind::k33 || k == ProductKind::k22) ? "+" : "-";
            const std::string pair = jacobi_label(k) >= 3 ? "[00;00] " + std::string(sign) + " [1/2 1/2;00]"
                                                          : "[0 1/2;00] " + std::string(sign) + " [1/2 0;00]";
            add("dp.split." + to_string(k), {x, y, w1, w2}, dp_grid, 1e-10,
                "theta" + j + "(x,w1) theta" + j + "(y,w2) = " + pair +
                    " at (x+y, x-y) on [[w1+w2, w1-w2],[w1-w2, w1+w2]]",
                [k](const Args& a, const RunContext& c) {
                    return detail::pair_report(double_product_split(k, a.complex("x"), a.complex("y"),
                                                                    a.tau("w1"), a.tau("w2"), c.numeric),
                                               "split");
                });
            add("dp.duplication." + to_string(k), {x, y, w},
                grid({{"x", {"0.13+0.05i"}}, {"y", {"0.31-0.07i"}}, {"w", {"0+1i", "0.25+0.9i"}}}), 1e-10,
                "theta" + j + "(x,w) theta" + j + "(y,w) in terms of theta3, theta2 at (x+y, 2w), (x-y, 2w)",
                [k](const Args& a, const RunContext& c) {
                    return detail::pair_report(
                        duplication(k, a.complex("x"), a.complex("y"), a.tau("w"), c.numeric), "duplication");
                });
        }
        for (Genus2Char g : {Genus2Char::g2_00, Genus2Char::g2_halfhalf, Genus2Char::g2_0half,
                             Genus2Char::g2_half0}) {
            const char* formula = "";
            switch (g) {
            case Genus2Char::g2_00: formula = "[00;00] = (theta3 theta3 + theta4 theta4)/2"; break;
            case Genus2Char::g2_halfhalf: formula = "[1/2 1/2;00] = (theta3 theta3 - theta4 theta4)/2"; break;
            case Genus2Char::g2_0half: formula = "[0 1/2;00] = (theta2 theta2 + theta1 theta1)/2"; break;
            case Genus2Char::g2_half0: formula = "[1/2 0;00] = (theta2 theta2 - theta1 theta1)/2"; break;
            }
            add("dp.inverse." + to_string(g), {x, y, w1, w2}, dp_grid, 1e-10,
                std::string(formula) + ", genus-1 factors at (x,w1) and (y,w2)",
                [g](const Args& a, const RunContext& c) {
                    return detail::pair_report(inverse_combine(g, a.complex("x"), a.complex("y"), a.tau("w1"),
                                                               a.tau("w2"), c.numeric),
                                               "inverse");
                });
        }
        add("dp.landen", {u, tau}, grid({{"u", {"0.2+0.1i"}}, {"tau", tau_grid}}), 1e-10,
            "theta4(u,tau) theta3(u,tau) = theta4(2u,2tau) theta4(0,2tau)",
            [](const Args& a, const RunContext& c) { return landen_from_double(a.complex("u"), a.tau(), c.numeric); });
        {
            std::vector<Binding> pts{
                {{"a1", "1/3"}, {"a2", "1/6"}, {"b1", "1/2"}, {"b2", "0"}, {"q", "0.25"}, {"r", "0.6"}},
                {{"a1", "0"}, {"a2", "1/2"}, {"b1", "1/5"}, {"b2", "2/5"}, {"q", "0.2+0.1i"}, {"r", "0.7-0.2i"}},
                {{"a1", "1/4"}, {"a2", "5/6"}, {"b1", "1/3"}, {"b2", "1/6"}, {"q", "0.3"}, {"r", "0.8+0.1i"}}};
            add("dp.general",
                {{"a1", ParamType::rational}, {"a2", ParamType::rational}, {"b1", ParamType::rational},
                 {"b2", ParamType::rational}, q, {"r", ParamType::complex}},
                pts, 1e-10,
                "[a1 a2; b1 b2](q,r) = [A;B+](q1)[D;B-](q2) + [A+1/2;B+](q1)[D+1/2;B-](q2), "
                "A=(a1+a2)/2, D=(a1-a2)/2, B+-=b1+-b2, q1=(qr)^2, q2=(q/r)^2",
                [](const Args& a, const RunContext& c) {
                    return detail::pair_report(general_char_split({a.rational("a1"), a.rational("a2")},
                                                                  {a.rational("b1"), a.rational("b2")},
                                                                  a.complex("q"), a.complex("r"), c.numeric),
                                               "general");
                });
        }
        add("dp.cubic_chars", {w, {"window", ParamType::integer}},
            grid({{"w", {"0+1i", "0.2+0.9i"}}, {"window", {"12"}}}), 1e-10,
            "[1/2 1/2;00] = [1/2 0;00] = [0 1/2;00] on [[4w,2w],[2w,4w]]; (m,n) = (j+k, -j-1)",
            [](const Args& a, const RunContext& c) {
                return cubic_char_equality(a.tau("w"), c.numeric, 1e-10, a.integer("window"));
            });

        // Cubic AGM
        add("cubic.links", {q}, grid({{"q", cubic_q}}), 1e-10,
            "a(q^4), b(q^4), c(q^4) = [00;00], [00;1/3 2/3], [1/3 1/3;00] on [[4w,2w],[2w,4w]], q = e^{pi i w}",
            [](const Args& a, const RunContext& c) { return abc_theta_links(a.complex("q"), c.numeric); });
        add("cubic.bba", {q}, grid({{"q", cubic_q}}), 1e-10,
            "a(q^4) = (theta3(q^3)theta3(q) + theta4(q^3)theta4(q))/2",
            [](const Args& a, const RunContext& c) { return bba_check(a.complex("q"), c.numeric); });
        add("cubic.bbc", {q}, grid({{"q", cubic_q}}), 1e-10,
            "b(q) = (3a(q^3) - a(q))/2, c(q) = (a(q^{1/3}) - a(q))/2",
            [](const Args& a, const RunContext& c) { return bbc_check(a.complex("q"), c.numeric); });
        add("cubic.identity", {q}, grid({{"q", cubic_q}}), 1e-9, "a(q)^3 = b(q)^3 + c(q)^3",
            [](const Args& a, const RunContext& c) {
                return cubic_identity(a.complex("q"), std::nullopt, c.numeric);
            });
        add("cubic.identity.offdiag", {q, {"r", ParamType::complex}},
            {{{"q", "0.2"}, {"r", "0.5"}}, {{"q", "0.3"}, {"r", "0.5+0.1i"}}}, 1e-9,
            "a(q,r)^3 = b(q,r)^3 + c(q,r)^3 fails once r^2 != q",
            [](const Args& a, const RunContext& c) {
                return cubic_identity(a.complex("q"), a.complex("r"), c.numeric);
            },
            Expectation::expected_fail);
        add("thetaR3.g1", {tau}, grid({{"tau", {"0+1i", "0+1.3i"}}}), 1e-10,
            "3[0;0]^3 = sum_{a',a'' in {0,1/3,2/3}} e(-3a'a'') [a';a'']^3 "
            "(printed phase; the conjugate e(+3a'a'') holds)",
            [](const Args& a, const RunContext& c) { return cube_sum_identity(a.tau(), c.numeric); },
            Expectation::expected_fail);
        add("thetaR3.g2",
            {{"t11", ParamType::complex}, {"t12", ParamType::complex}, {"t22", ParamType::complex}},
            {{{"t11", "0+4i"}, {"t12", "0+2i"}, {"t22", "0+4i"}},
             {{"t11", "0.1+1.2i"}, {"t12", "0.2+0.3i"}, {"t22", "-0.1+1.1i"}},
             {{"t11", "0+1.5i"}, {"t12", "0+0.5i"}, {"t22", "0+1.5i"}}},
            1e-9,
            "9[00;00]^3 = sum over 81 characteristics in {0,1/3,2/3}^4 of e(-3a'.a'') [a';a'']^3 "
            "(printed phase; the conjugate e(+3a'.a'') holds)",
            [](const Args& a, const RunContext& c) {
                return cube_sum_identity(PeriodMatrix2(a.complex("t11"), a.complex("t12"), a.complex("t22")),
                                         c.numeric);
            },
            Expectation::expected_fail);

        // Exact q-series
        const std::pair<std::string, std::pair<FormalSpec, std::string>> formal[] = {
            {"formal.agm2", {{FormalIdentity::agm2_cancel}, "prod(1-q^{4n})^2(1-q^{4n-2})^2 = prod(1-q^{2n})^2"}},
            {"formal.theta13",
             {{FormalIdentity::theta_13},
              "prod(1+q^{2n-1})^2(1+q^{6n-3})^2 - prod(1-q^{2n-1})^2(1-q^{6n-3})^2 = 4q prod(1+q^{2n})^2(1+q^{6n})^2"}},
            {"formal.quartic", {{FormalIdentity::quartic}, "theta3^4 = theta4^4 + theta2^4 (product forms)"}},
            {"formal.landen_nd.p2",
             {{FormalIdentity::landen_nd, 2},
              "theta4(2u,2tau) prod(1-q^{2n})^2 = theta4(u)theta3(u) prod(1-q^{4n}) in (q, z=e^{pi i u})"}},
            {"formal.landen_nd.p3",
             {{FormalIdentity::landen_nd, 3},
              "theta4(3u,3tau) prod(1-q^{2n})^3 = prod(1-q^{2n})^3(1-q^{6n-3}z^6)(1-q^{6n-3}z^-6)(1-q^{6n})"}},
            {"formal.modular3",
             {{FormalIdentity::modular3}, "theta4(q)theta4(q^3) + theta2(q)theta2(q^3) = theta3(q)theta3(q^3) (sums)"}}};
        for (const auto& [id, body] : formal) {
            const FormalSpec spec = body.first;
            add(id, {order}, grid({{"order", {"200"}}}), 1.0, body.second,
                [spec](const Args& a, const RunContext&) { return detail::formal_report(spec, a); });
        }
    }

    std::vector<IdentityEntry> entries_;
};

/// The process-wide catalog.
inline const Registry& registry() {
    static const Registry r;
    return r;
}

inline std::vector<EntryResult> run_entry(const std::string& id, const Binding& overrides = {},
                                          const RunOptions& opt = {}) {
    return registry().run(id, overrides, opt);
}

inline std::vector<const IdentityEntry*> list_entries(const std::string& filter = "") {
    return registry().list(filter);
}

} // namespace thetalab
