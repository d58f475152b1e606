#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixnet {

using cplx = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr double PI = 3.14159265358979323846264338327950288;

// e^(2*pi*i*k/b), k reduced mod b
inline cplx root_of_unity(long long k, long long b) {
    long long r = k % b;
    if (r < 0) r += b;
    double ang = 2.0 * PI * double(r) / double(b);
    return {std::cos(ang), std::sin(ang)};
}

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline double rat_to_double(const Rat& r) {
    return static_cast<double>(r);
}

}  // namespace mixnet
