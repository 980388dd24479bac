#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pvalab {

// Exact rational scalar. All arithmetic in the engine is exact; zero tests
// are decidable equality checks.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace pvalab
