#pragma once

#include <string>
#include <vector>

#include "somos/errors.hpp"
#include "somos/rational.hpp"

namespace somos {

// Finite contiguous slice [lo, hi] of a bi-infinite sequence.
template <typename T>
class Window {
public:
    Window() = default;
    Window(long lo, std::vector<T> values) : lo_(lo), v_(std::move(values)) {}

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    bool contains(long n) const { return n >= lo_ && n <= hi(); }

    const T& operator[](long n) const { return v_[static_cast<std::size_t>(n - lo_)]; }
    T& operator[](long n) { return v_[static_cast<std::size_t>(n - lo_)]; }
    const T& at(long n) const {
        if (!contains(n))
            throw OutOfRange("index " + std::to_string(n) + " outside [" + std::to_string(lo_) +
                             ", " + std::to_string(hi()) + "]");
        return (*this)[n];
    }

    const std::vector<T>& values() const { return v_; }

    friend bool operator==(const Window&, const Window&) = default;

private:
    long lo_ = 0;
    std::vector<T> v_;
};

using OrbitWindow = Window<Rational>;

}  // namespace somos
