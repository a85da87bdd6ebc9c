#ifndef SCOMP_BIGINT_HPP
#define SCOMP_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace scomp {

// All counting in this library is exact; counts such as 2^(n-1) overflow
// 64-bit integers long before n reaches interesting sizes.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Floor/ceil division for signed operands (C++ '/' truncates toward zero).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// k^e by repeated squaring, exact for negative bases.
inline BigInt int_pow(BigInt base, std::uint64_t exp) {
    BigInt result = 1;
    while (exp != 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

// C(n, k) as a product of exact divisions; 0 when k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace scomp

#endif
