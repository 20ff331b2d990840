#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cperm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;  // always exact at this point
    }
    return b;
}

inline BigInt int_pow(BigInt base, int exp) {
    BigInt p = 1;
    while (exp > 0) {
        if (exp & 1) p *= base;
        base *= base;
        exp >>= 1;
    }
    return p;
}

}  // namespace cperm
