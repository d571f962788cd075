#include <gtest/gtest.h>

#include "somos/report.hpp"
#include "support.hpp"

using namespace somos;
using namespace somos::test;
using somos::report::json;

TEST(Report, ExactAndApprox) {
    EXPECT_EQ(report::exact(R("-6/4")), "-3/2");
    EXPECT_EQ(report::exact(Rational(7)), "7");
    EXPECT_EQ(report::approx(0.5), "~0.5");
    EXPECT_EQ(report::approx(0.1).front(), '~');
}

TEST(Report, WindowJson) {
    const json j = report::window_json(OrbitWindow(-1, {R("1/2"), 3}));
    EXPECT_EQ(j.dump(), report::window_json(OrbitWindow(-1, {R("2/4"), 3})).dump());
    EXPECT_NE(j.dump().find("1/2"), std::string::npos);
}

TEST(Report, IdentityReportCapsFailures) {
    IdentityReport r;
    r.identity = "demo";
    r.trials_run = 30;
    for (long i = 0; i < 30; ++i) r.failures.push_back({i, "D", "P=1", {i}, "1", "2"});
    const json j = report::to_json(r, 5);
    EXPECT_EQ(j["failures"].size(), 5u);
    EXPECT_EQ(j["failures_total"], 30);
    EXPECT_EQ(j["identity"], "demo");
}

TEST(Report, ManifestOmitsWallTime) {
    report::RunManifest m;
    m.command = "verify-all";
    m.seed = 42;
    m.wall_time = 12.5;
    const json a = m.to_json();
    m.wall_time = 99;
    EXPECT_EQ(a.dump(), m.to_json().dump());
    EXPECT_FALSE(a.contains("wall_time"));
    EXPECT_EQ(a["version"], SOMOS_VERSION);
}
