#pragma once

#include "fatpart/numeric.hpp"
#include "fatpart/ratmat.hpp"
#include "fatpart/rng.hpp"
#include "fatpart/symfun.hpp"

namespace fatpart {

// Small seeded rational data used by verification cases and tests.

inline Rat random_small_rational(RngStream& rng, bool nonzero = false) {
    for (;;) {
        long num = static_cast<long>(rng.next_u64() % 19) - 9;
        long den = static_cast<long>(rng.next_u64() % 9) + 1;
        Rat q(num, den);
        if (!nonzero || q != 0) return q;
    }
}

inline PowerSums<Rat> random_power_sums(uint64_t seed, int K) {
    RngStream rng(seed);
    PowerSums<Rat> ps;
    for (int i = 0; i < K; ++i) ps.values.push_back(random_small_rational(rng));
    return ps;
}

inline Specialization random_explicit_spec(uint64_t seed, int K) {
    return Specialization::explicit_ps(random_power_sums(seed, K).values);
}

inline RatMat random_rational_matrix(uint64_t seed, int n) {
    RngStream rng(seed);
    RatMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_small_rational(rng);
    return m;
}

// invertible variant (retries the seed stream until the inverse exists)
inline RatMat random_invertible_matrix(uint64_t seed, int n) {
    RngStream rng(seed);
    for (;;) {
        RatMat m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = random_small_rational(rng);
        try {
            m.inverse();
            return m;
        } catch (const std::domain_error&) {
        }
    }
}

}  // namespace fatpart
