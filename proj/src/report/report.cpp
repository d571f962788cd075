#include "somos/report.hpp"

#include <cstdio>

namespace somos::report {

std::string exact(const Rational& r) { return r.to_string(); }

std::string exact(const QuadExt& x) { return x.to_string(); }

std::string approx(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "~%.17g", x);
    return buf;
}

json window_json(const OrbitWindow& w) {
    json a = json::array();
    for (long n = w.lo(); n <= w.hi(); ++n) a.push_back({{"n", n}, {"value", exact(w[n])}});
    return a;
}

json to_json(const IdentityReport& r, std::size_t max_failures) {
    json f = json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
        const auto& x = r.failures[i];
        f.push_back({{"trial", x.trial},
                     {"form", x.form},
                     {"params", x.params},
                     {"indices", x.indices},
                     {"lhs", x.lhs},
                     {"rhs", x.rhs}});
    }
    return {{"identity", r.identity},
            {"status", r.passed() ? "pass" : "fail"},
            {"trials_run", r.trials_run},
            {"checks_run", r.checks_run},
            {"failures_total", r.failures.size()},
            {"failures", f},
            {"notes", r.notes}};
}

json to_json(const SuiteReport& s) {
    json a = json::array();
    for (const auto& r : s.reports) a.push_back(to_json(r));
    return {{"status", s.passed() ? "pass" : "fail"}, {"failures_total", s.failures()}, {"reports", a}};
}

json to_json(const LambdaEnumeration& e) {
    return {{"d", e.d},
            {"instances", e.instances},
            {"candidates", e.candidates},
            {"classes", e.classes},
            {"trivial_classes", e.trivial_classes},
            {"shift_closed", e.shift_closed},
            {"status", e.status}};
}

namespace {

json rows_json(const std::vector<std::vector<Integer>>& rows) {
    json a = json::array();
    for (const auto& row : rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        a.push_back(r);
    }
    return a;
}

}  // namespace

json to_json(const Triangles& t) {
    return {{"e", rows_json(t.e)},
            {"euler", rows_json(t.euler)},
            {"worpitzky", t.worpitzky},
            {"relation", t.relation},
            {"matches_A_series", t.matches_A}};
}

json to_json(const PositivityReport& p) {
    json rows = json::array();
    for (const auto& r : p.rows) {
        json pos = json::array(), cr = json::array();
        for (const auto& [a, b] : r.positive) pos.push_back({approx(a), approx(b)});
        for (const auto& c : r.crossings)
            cr.push_back({{"factor", c.factor}, {"x", approx(c.x)}, {"kind", c.numerator ? "zero" : "pole"}});
        rows.push_back({{"n", r.n}, {"positive", pos}, {"crossings", cr}});
    }
    return {{"x_end", approx(p.x_end)}, {"rows", rows}};
}

json RunManifest::to_json() const {
    return {{"command", command}, {"params", params}, {"seed", seed},
            {"version", version}, {"passed", passed}, {"failed", failed}};
}

}  // namespace somos::report
