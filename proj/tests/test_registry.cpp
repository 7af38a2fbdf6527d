#include "thetalab/registry.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace thetalab;

TEST(Registry, LandenEntryRunsItsGrid) {
    const auto results = run_entry("landen.p3");
    ASSERT_EQ(results.size(), 6u);
    for (const auto& r : results) {
        EXPECT_EQ(r.verdict, Verdict::pass) << r.report.residual;
        EXPECT_EQ(r.report.identity_id, "landen.p3");
        EXPECT_EQ(r.report.params.count("tau"), 1u);
        EXPECT_EQ(r.report.params.count("u"), 1u);
    }
}

TEST(Registry, OffDiagonalCubicIsExpectedFailure) {
    const auto results = run_entry("cubic.identity.offdiag");
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) {
        EXPECT_EQ(r.verdict, Verdict::xfail);
        EXPECT_GT(r.report.residual, 1e-4);
    }
}

TEST(Registry, UnknownId) {
    EXPECT_THROW(run_entry("nosuch"), UnknownIdentity);
    EXPECT_THROW(registry().find("landen"), UnknownIdentity);
}

TEST(Registry, ListFilter) {
    const auto landen = list_entries("landen");
    EXPECT_GE(landen.size(), 6u);
    for (const auto* e : landen) EXPECT_NE(e->id.find("landen"), std::string::npos);
    EXPECT_GE(list_entries().size(), 25u);
    EXPECT_TRUE(list_entries("zz").empty());
    EXPECT_EQ(list_entries("fk").size(), 3u);
    const auto all = list_entries();
    for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1]->id, all[k]->id);
}

TEST(Registry, CatalogShape) {
    std::set<std::string> ids;
    for (const auto& e : registry().entries()) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        EXPECT_FALSE(e.anchor.empty()) << e.id;
        EXPECT_FALSE(e.default_grid.empty()) << e.id;
        EXPECT_GT(e.tolerance, 0.0) << e.id;
        for (const auto& b : e.default_grid)
            for (const auto& p : e.schema) EXPECT_EQ(b.count(p.name), 1u) << e.id << " " << p.name;
    }
}

TEST(Registry, ExpectedFailuresAreMarked) {
    for (const char* id : {"landens3.theta2", "fk.p5", "fk.p7_13", "fk.p7_35", "thetaR3.g1", "thetaR3.g2",
                           "cubic.identity.offdiag"})
        EXPECT_EQ(registry().find(id).expected, Expectation::expected_fail) << id;
    EXPECT_EQ(registry().find("landen.p2").expected, Expectation::pass);
}

TEST(Registry, Deterministic) {
    const auto a = run_entry("dp.general"), b = run_entry("dp.general");
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].report.residual, b[k].report.residual);
        EXPECT_EQ(a[k].report.params, b[k].report.params);
    }
}

TEST(Registry, Overrides) {
    const auto one = run_entry("landen.p2", {{"tau", "0.1+1.1i"}});
    ASSERT_EQ(one.size(), 2u); // the tau axis collapses, the u axis stays
    for (const auto& r : one) {
        EXPECT_EQ(r.report.params.at("tau"), "0.1+1.1i");
        EXPECT_EQ(r.verdict, Verdict::pass);
    }
    EXPECT_THROW(run_entry("landen.p2", {{"bogus", "1"}}), UsageError);
    EXPECT_THROW(run_entry("landen.p2", {{"tau", "abc"}}), UsageError);
    EXPECT_THROW(run_entry("formal.quartic", {{"order", "1.5"}}), UsageError);
    RunOptions loose;
    loose.strict_overrides = false;
    EXPECT_EQ(run_entry("landen.p2", {{"bogus", "1"}}, loose).size(), 6u);
}

TEST(Registry, EvaluationErrorsBecomeFailedReports) {
    const auto r = run_entry("landen.p2", {{"tau", "0-1i"}});
    ASSERT_FALSE(r.empty());
    EXPECT_EQ(r[0].verdict, Verdict::fail);
    EXPECT_NE(r[0].report.error.find("Im(tau) must be positive"), std::string::npos);
}

TEST(Registry, ToleranceOverride) {
    RunOptions strict;
    strict.tol = 1e-30;
    const auto r = run_entry("landen.p2", {}, strict);
    for (const auto& x : r) EXPECT_EQ(x.verdict, Verdict::fail);
    RunOptions bad;
    bad.tol = -1.0;
    EXPECT_THROW(run_entry("landen.p2", {}, bad), UsageError);
}

TEST(Registry, FormalOrderOverride) {
    const auto r = run_entry("formal.landen_nd.p3", {{"order", "60"}});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].verdict, Verdict::pass);
    EXPECT_EQ(r[0].report.residual, 0.0);
}

TEST(Registry, Classify) {
    IdentityReport good;
    good.add("x", Complex(1.0), Complex(1.0));
    good.finalize(1e-10);
    IdentityReport bad;
    bad.add("x", Complex(1.0), Complex(2.0));
    bad.finalize(1e-10);
    IdentityReport broken;
    broken.error = "boom";
    broken.finalize(1e-10);
    EXPECT_EQ(classify(good, Expectation::pass), Verdict::pass);
    EXPECT_EQ(classify(bad, Expectation::pass), Verdict::fail);
    EXPECT_EQ(classify(bad, Expectation::expected_fail), Verdict::xfail);
    EXPECT_EQ(classify(good, Expectation::expected_fail), Verdict::xpass);
    EXPECT_EQ(classify(broken, Expectation::expected_fail), Verdict::fail);
    EXPECT_TRUE(is_unexpected(Verdict::xpass));
    EXPECT_FALSE(is_unexpected(Verdict::xfail));
}

TEST(Registry, WholeCatalogHasNoUnexpectedVerdicts) {
    for (const auto* e : list_entries())
        for (const auto& r : run_entry(e->id))
            EXPECT_FALSE(is_unexpected(r.verdict))
                << e->id << " " << to_string(r.verdict) << " " << r.report.residual << " " << r.report.error;
}
