#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "somos/identities.hpp"
#include "somos/quad_ext.hpp"
#include "somos/rational.hpp"
#include "somos/volterra.hpp"
#include "somos/window.hpp"

namespace somos::report {

using nlohmann::json;

// Exact values print as num/den; floats carry a leading '~'.
std::string exact(const Rational& r);
std::string exact(const QuadExt& x);
std::string approx(double x);

json window_json(const OrbitWindow& w);
// At most max_failures failures are listed; failures_total has the count.
json to_json(const IdentityReport& r, std::size_t max_failures = 20);
json to_json(const SuiteReport& s);
json to_json(const LambdaEnumeration& e);
json to_json(const Triangles& t);
json to_json(const PositivityReport& p);

struct RunManifest {
    std::string command;
    json params = json::object();
    std::uint64_t seed = 0;
    std::string version = SOMOS_VERSION;
    long passed = 0;
    long failed = 0;
    double wall_time = 0;  // kept off stdout so reruns stay byte-identical

    json to_json() const;
};

}  // namespace somos::report
