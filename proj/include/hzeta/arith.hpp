#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hzeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r = 1, b = base;
        long k = e;
        while (k > 0) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
    return 1 / rat_pow(base, -e);
}

// Ordinary binomial coefficient.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline long ipow_small(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// Raised when an enumeration would exceed its configured size budget.
struct ResourceLimitError : std::runtime_error {
    Int estimate;
    explicit ResourceLimitError(const std::string& what, Int est)
        : std::runtime_error(what + " (estimated size " + est.str() + ")"), estimate(std::move(est)) {}
};

}  // namespace hzeta
