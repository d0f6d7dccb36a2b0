#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace symquot {

// All exact arithmetic runs on arbitrary-precision integers.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

// Coefficient of q^d in (1-q)^m for any integer m (negative exponents allowed).
// For m >= 0 this is (-1)^d C(m,d); for m < 0 it is C(d-m-1, d).
inline Integer series_coefficient_one_minus_q_pow(long m, long d) {
    if (d < 0) return 0;
    if (m >= 0) {
        Integer c = binomial(m, d);
        return (d % 2 == 0) ? c : -c;
    }
    return binomial(d - m - 1, d);
}

// (2g+2)^d clamped at `cap`+1 so callers can test the guard without overflow.
inline std::uint64_t basis_size_clamped(int genus, int d, std::uint64_t cap) {
    std::uint64_t base = 2u * static_cast<std::uint64_t>(genus) + 2u;
    std::uint64_t acc = 1;
    for (int i = 0; i < d; ++i) {
        if (acc > cap / base) return cap + 1;
        acc *= base;
    }
    return acc;
}

constexpr std::uint64_t kDefaultMaxBasis = 2'000'000;
constexpr int kDefaultMaxSymmetrizeSlots = 7;

} // namespace symquot
