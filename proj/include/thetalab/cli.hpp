// theta_lab command line: eval | verify | list.
//
// Exit codes: 0 ok, 1 unexpected verification failures, 2 usage/parse
// errors and unknown ids, 3 domain or evaluation errors.
#pragma once

#include "thetalab/cubic_agm.hpp"
#include "thetalab/genus1.hpp"
#include "thetalab/genus2.hpp"
#include "thetalab/landen.hpp"
#include "thetalab/parse.hpp"
#include "thetalab/registry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace thetalab::cli {

enum ExitCode { ok = 0, unexpected_failure = 1, usage = 2, evaluation = 3 };

/// "%.15f" without a negative zero.
inline std::string fixed15(double x) {
    std::string s = format_double(x, "%.15f");
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

inline std::string format_value(Complex z) { return fixed15(z.real()) + "\t" + fixed15(z.imag()); }

/// key=value tokens; a repeated key is an error.
inline Binding parse_bindings(const std::vector<std::string>& tokens) {
    Binding b;
    for (const auto& t : tokens) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + t + "'");
        if (!b.emplace(t.substr(0, eq), t.substr(eq + 1)).second)
            throw UsageError("parameter " + t.substr(0, eq) + " given twice");
    }
    return b;
}

/// Reads THETA_LAB_MAX_TERMS when set.
inline std::optional<int> env_max_terms() {
    const char* v = std::getenv("THETA_LAB_MAX_TERMS");
    if (!v || !*v) return std::nullopt;
    const std::int64_t n = parse_int(v);
    if (n < 1 || n > 100000000) throw UsageError("THETA_LAB_MAX_TERMS must be a positive integer");
    return static_cast<int>(n);
}

namespace detail {

/// Typed access to eval arguments; every key must be consumed.
class EvalArgs {
public:
    explicit EvalArgs(Binding b) : b_(std::move(b)) {}

    Complex complex(const std::string& k) { return parse_complex(take(k)); }
    Complex complex_or(const std::string& k, Complex dflt) { return has(k) ? complex(k) : dflt; }
    Rational rational_or(const std::string& k, Rational dflt) { return has(k) ? parse_rational(take(k)) : dflt; }
    int integer(const std::string& k) { return static_cast<int>(parse_int(take(k))); }
    bool has(const std::string& k) const { return b_.count(k) != 0; }

    void finish() const {
        for (const auto& [k, v] : b_)
            if (!used_.count(k)) throw UsageError("unexpected argument " + k);
    }

private:
    const std::string& take(const std::string& k) {
        const auto it = b_.find(k);
        if (it == b_.end()) throw UsageError("missing argument " + k);
        used_.insert(k);
        return it->second;
    }
    Binding b_;
    std::set<std::string> used_;
};

inline Complex eval_function(const std::string& fn, EvalArgs& a, const Tolerance& tol) {
    auto tau = [&] { return TauPoint(a.complex("tau")); };
    if (fn.size() == 6 && fn.rfind("theta", 0) == 0 && fn[5] >= '1' && fn[5] <= '4')
        return theta_j(fn[5] - '0', a.complex_or("u", 0.0), tau(), tol);
    if (fn == "theta_char_g1") {
        const CharPair ch{a.rational_or("a", Rational(0)), a.rational_or("b", Rational(0))};
        return theta_char_g1(ch, a.complex_or("u", 0.0), tau(), tol);
    }
    if (fn == "theta_char_g2") {
        const CharQuad ch{{a.rational_or("a1", Rational(0)), a.rational_or("a2", Rational(0))},
                          {a.rational_or("b1", Rational(0)), a.rational_or("b2", Rational(0))}};
        const Vec2 z{a.complex_or("z1", 0.0), a.complex_or("z2", 0.0)};
        const PeriodMatrix2 m(a.complex("t11"), a.complex("t12"), a.complex("t22"));
        return theta_char_g2(ch, z, m, tol);
    }
    if (fn == "eta") return dedekind_eta(tau(), tol);
    if (fn == "a" || fn == "b" || fn == "c") {
        const AbcKind k = fn == "a" ? AbcKind::a : fn == "b" ? AbcKind::b : AbcKind::c;
        const Nome q = Nome::from_value(a.complex("q"));
        std::optional<Nome> r;
        if (a.has("r")) r = Nome::from_value(a.complex("r"));
        return abc_value(k, q, r, tol);
    }
    if (fn == "landen_ratio") {
        const int p = a.integer("p");
        return landen_ratio(p, a.complex_or("u", 0.0), tau(), tol);
    }
    if (fn == "landen_rhs") {
        const int p = a.integer("p");
        return landen_rhs(p, tau(), tol);
    }
    throw UsageError("unknown function " + fn +
                     " (theta1..theta4, theta_char_g1, theta_char_g2, eta, a, b, c, landen_ratio, landen_rhs)");
}

inline std::string params_text(const ParamMap& p) {
    if (p.empty()) return "-";
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + v;
    return s;
}

inline nlohmann::json side_json(const Side& s) {
    if (const auto* z = std::get_if<Complex>(&s)) return nlohmann::json::array({z->real(), z->imag()});
    return std::get<std::string>(s);
}

inline nlohmann::json number_or_null(double x) {
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

inline nlohmann::json report_json(const IdentityEntry& e, const EntryResult& r) {
    const IdentityReport& rep = r.report;
    nlohmann::json j;
    j["id"] = rep.identity_id;
    j["params"] = rep.params;
    const Comparison* head = rep.headline();
    j["lhs"] = head ? side_json(head->lhs) : nlohmann::json(nullptr);
    j["rhs"] = head ? side_json(head->rhs) : nlohmann::json(nullptr);
    j["residual"] = rep.error.empty() ? number_or_null(rep.residual) : nlohmann::json(nullptr);
    j["tolerance"] = rep.tolerance;
    j["verdict"] = to_string(r.verdict);
    j["paper_anchor"] = e.anchor;
    if (!rep.diagnostics.empty()) j["notes"] = rep.diagnostics;
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

} // namespace detail

struct VerifyRequest {
    std::string id;
    bool all = false;
    bool json = false;
    std::optional<double> tol;
    std::optional<std::string> tau;
    std::optional<std::int64_t> order;
    std::vector<std::string> overrides;
};

inline int cmd_verify(VerifyRequest req, std::ostream& out, std::ostream& err) {
    // with --all the first positional is an override, not an id
    if (req.all && req.id.find('=') != std::string::npos) {
        req.overrides.insert(req.overrides.begin(), req.id);
        req.id.clear();
    }
    if (req.all == !req.id.empty())
        throw UsageError("verify needs exactly one of <id> or --all");
    const Binding hard = parse_bindings(req.overrides);
    Binding soft;
    if (req.tau) soft["tau"] = *req.tau;
    if (req.order) soft["order"] = std::to_string(*req.order);

    RunOptions opt;
    opt.tol = req.tol;
    opt.max_terms = env_max_terms();
    opt.strict_overrides = !req.all;

    std::vector<const IdentityEntry*> targets;
    if (req.all)
        targets = list_entries();
    else
        targets.push_back(&registry().find(req.id));

    // validate every override before running anything
    for (const IdentityEntry* e : targets) {
        Binding b = hard;
        for (const auto& [k, v] : soft)
            if (e->has_param(k)) b[k] = v;
        registry().points(*e, b, opt.strict_overrides);
    }

    bool unexpected = false;
    for (const IdentityEntry* e : targets) {
        Binding b = hard;
        for (const auto& [k, v] : soft)
            if (e->has_param(k)) b[k] = v;
        for (const EntryResult& r : registry().run(e->id, b, opt)) {
            unexpected = unexpected || is_unexpected(r.verdict);
            if (req.json) {
                out << detail::report_json(*e, r).dump() << '\n';
            } else {
                const std::string res = r.report.error.empty() ? format_double(r.report.residual, "%.3e") : "error";
                out << e->id << '\t' << detail::params_text(r.report.params) << '\t' << res << '\t'
                    << to_string(r.verdict) << '\n';
            }
            if (!r.report.error.empty()) err << e->id << ": " << r.report.error << '\n';
        }
        out.flush();
    }
    return unexpected ? unexpected_failure : ok;
}

inline int cmd_list(const std::string& filter, bool json, std::ostream& out) {
    for (const IdentityEntry* e : list_entries(filter)) {
        std::string schema;
        for (const auto& p : e->schema) schema += (schema.empty() ? "" : ",") + p.name + ":" + to_string(p.type);
        const char* expected = e->expected == Expectation::pass ? "pass" : "expected_fail";
        if (json) {
            nlohmann::json j{{"id", e->id},
                             {"params", schema},
                             {"expected", expected},
                             {"tolerance", e->tolerance},
                             {"grid_points", e->default_grid.size()},
                             {"paper_anchor", e->anchor}};
            out << j.dump() << '\n';
        } else {
            out << e->id << '\t' << schema << '\t' << expected << '\t' << e->anchor << '\n';
        }
    }
    return ok;
}

inline int cmd_eval(const std::string& fn, const std::vector<std::string>& tokens,
                    const std::optional<std::string>& tau_flag, std::optional<double> tol_flag,
                    std::ostream& out) {
    Binding b = parse_bindings(tokens);
    if (tau_flag && !b.emplace("tau", *tau_flag).second)
        throw UsageError("tau given both as --tau and tau=");
    Tolerance tol;
    if (tol_flag) tol = Tolerance(*tol_flag);
    if (const auto cap = env_max_terms()) tol.max_terms = *cap;
    detail::EvalArgs args(std::move(b));
    const Complex v = detail::eval_function(fn, args, tol);
    args.finish();
    out << format_value(v) << '\n';
    return ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"theta_lab: theta functions, eta, Borwein cubic series and identity verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string eval_fn;
    std::vector<std::string> eval_args;
    std::optional<std::string> eval_tau;
    std::optional<double> eval_tol;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a function, print re<TAB>im");
    eval->add_option("function", eval_fn, "theta1..theta4, theta_char_g1, theta_char_g2, eta, a, b, c, "
                                          "landen_ratio, landen_rhs")
        ->required();
    eval->add_option("args", eval_args, "key=value arguments (complex as a+bi)");
    eval->add_option("--tau", eval_tau, "modulus tau");
    eval->add_option("--tol", eval_tol, "truncation tolerance");

    VerifyRequest vr;
    CLI::App* verify = app.add_subcommand("verify", "verify one identity or the whole catalog");
    verify->add_option("id", vr.id, "registry id");
    verify->add_option("overrides", vr.overrides, "key=value parameter overrides");
    verify->add_flag("--all", vr.all, "verify every registry entry");
    verify->add_flag("--json", vr.json, "one JSON object per report line");
    verify->add_option("--tol", vr.tol, "pass threshold for the residual");
    verify->add_option("--tau", vr.tau, "override tau where the entry has one");
    verify->add_option("--order", vr.order, "truncation order for formal.* entries");

    std::string filter;
    bool list_json = false;
    CLI::App* list = app.add_subcommand("list", "list registry entries");
    list->add_option("--filter", filter, "substring of the id");
    list->add_flag("--json", list_json, "one JSON object per entry");

    std::vector<std::string> args;
    for (int k = argc - 1; k > 0; --k) args.emplace_back(argv[k]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "theta_lab: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*eval) return cmd_eval(eval_fn, eval_args, eval_tau, eval_tol, out);
        if (*verify) return cmd_verify(vr, out, err);
        return cmd_list(filter, list_json, out);
    } catch (const UsageError& e) {
        err << "theta_lab: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        // DomainError, PrecisionError, NearZeroDivision
        err << "theta_lab: " << e.what() << '\n';
        return evaluation;
    }
}

} // namespace thetalab::cli
