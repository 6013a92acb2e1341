#pragma once

#include <cstdint>
#include <random>

#include "weber/error.hpp"

namespace weber::test {

// Runs `expr` and returns the ErrorKind it threw; fails the test if nothing was thrown.
template <class F>
ErrorKind thrown_kind(F&& expr) {
    try {
        expr();
    } catch (const Error& e) {
        return e.kind();
    }
    throw std::logic_error("expected weber::Error");
}

// Portable uniform doubles on [lo, hi) from a fixed seed.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : engine_(seed) {}
    double operator()(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace weber::test
