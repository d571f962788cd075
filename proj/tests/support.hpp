#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "somos/quad_ext.hpp"
#include "somos/rational.hpp"
#include "somos/sequences.hpp"

namespace somos {
// gtest printers, found by ADL.
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const QuadExt& x, std::ostream* os) { *os << x.to_string(); }
}  // namespace somos

namespace somos::test {

inline Rational R(const char* s) { return Rational::parse(s); }

inline std::vector<Rational> Rs(std::initializer_list<long> xs) {
    return {xs.begin(), xs.end()};
}

inline GaleRobinsonParams somos4_unit() { return GaleRobinsonParams::somos4(1, 1, Rs({1, 1, 1, 1})); }

// Somos(4) over [lo, hi].
inline OrbitWindow somos4_window(long lo, long hi) { return gale_robinson_extend(somos4_unit(), lo, hi); }

inline std::vector<Rational> values(const OrbitWindow& w) { return w.values(); }

}  // namespace somos::test
