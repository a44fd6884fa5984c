#pragma once

// Shared helpers for the test suites: tiny independent oracles and
// pseudo-random generators with fixed seeds.  The oracles deliberately avoid
// the library's own code paths.

#include "umbral/rat.hpp"
#include "umbral/series.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using umbral::rat;

// f_0 = 1 and f_n = f_{n-1} + f_{n-2} with the out-of-range terms read as 0,
// which is the convention the recurrence kernel encodes.
inline std::vector<long long> fibonacci_oracle(std::size_t count) {
    std::vector<long long> f(count);
    for (std::size_t n = 0; n < count; ++n) {
        long long v = n == 0 ? 1 : 0;
        if (n >= 1)
            v += f[n - 1];
        if (n >= 2)
            v += f[n - 2];
        f[n] = v;
    }
    return f;
}

// Brute-force double loop over the Bell recurrence B_n = sum C(n-1,k) B_k,
// with the binomials built from Pascal's rule rather than any library call.
inline std::vector<long long> bell_oracle(std::size_t count) {
    std::vector<std::vector<long long>> pascal(count);
    for (std::size_t n = 0; n < count; ++n) {
        pascal[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    std::vector<long long> bell(count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            bell[0] = 1;
            continue;
        }
        long long acc = 0;
        for (std::size_t k = 0; k < n; ++k)
            acc += pascal[n - 1][k] * bell[k];
        bell[n] = acc;
    }
    return bell;
}

inline rat random_rat(std::mt19937& gen, long long max_num = 6, long long max_den = 4) {
    std::uniform_int_distribution<long long> num(-max_num, max_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return rat(num(gen), den(gen));
}

inline rat random_nonzero_rat(std::mt19937& gen, long long max_num = 6, long long max_den = 4) {
    for (;;) {
        rat r = random_rat(gen, max_num, max_den);
        if (!r.is_zero())
            return r;
    }
}

inline std::vector<rat> rats(std::initializer_list<long long> values) {
    std::vector<rat> out;
    out.reserve(values.size());
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

inline umbral::series ord(std::initializer_list<long long> values) {
    return umbral::series(umbral::flavor::ordinary, rats(values));
}

inline umbral::series expo(std::initializer_list<long long> values) {
    return umbral::series(umbral::flavor::exponential, rats(values));
}

} // namespace testsupport
