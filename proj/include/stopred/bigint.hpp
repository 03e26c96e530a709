#ifndef STOPRED_BIGINT_HPP
#define STOPRED_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace stopred {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero for k < 0 or k > n.
inline BigInt binom(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline uint64_t binom_u64(long long n, long long k) {
    return static_cast<uint64_t>(binom(n, k));
}

inline BigInt pow2(std::size_t e) {
    return BigInt(1) << e;
}

}  // namespace stopred

#endif
