#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pbwlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero outside 0 <= k <= m.
inline BigInt binomial(long long m, long long k) {
    if (k < 0 || m < 0 || k > m)
        return 0;
    if (k > m - k)
        k = m - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= m - k + i;
        r /= i;
    }
    return r;
}

}  // namespace pbwlab
