#pragma once

#include "fatpart/partition.hpp"
#include "fatpart/series.hpp"
#include "fatpart/symfun.hpp"

#include <cstdint>
#include <vector>

namespace fatpart {

// Hard-core coordinates x_i = lambda_i - 2i + 1 + 2N; consecutive gaps >= 2.
struct DSEPoint {
    Partition lambda;
    std::vector<long> x;

    static DSEPoint from(const Partition& lam, int N);
};

// prod_{i<j} (x_i-x_j)^2 ((x_i-x_j)^2 - 1) / prod_i x_i! (x_i-1)!
// Equals s_{lambda∪lambda}(p_inf); the identity is pinned by tests.
Rat dse_weight(const Partition& lam, int N);

enum class DseKind {
    borodin,  // sum over l(lambda) <= N of s_{lambda∪lambda}(p)
    star      // sum over l(lambda∪lambda) <= N of (s_{l∪l}(N p_inf))^{-p_exp} s_{l∪l}(N p)
};

// `cutoff` bounds the weight of the fat partition lambda∪lambda.
SeriesValue dse_partition_function(DseKind kind, const Specialization& p, int N, int cutoff,
                                   int p_exp = 1);
std::vector<std::pair<Partition, Rat>> dse_terms(DseKind kind, const Specialization& p, int N,
                                                 int cutoff, int p_exp = 1);

// Exact sampling by enumeration and normalized cumulative weights; every
// enumerated weight must be nonnegative (the offending partition is reported
// otherwise). Deterministic for a fixed seed.
std::vector<Partition> dse_sample(DseKind kind, const Specialization& p, int N, int cutoff,
                                  long count, uint64_t seed, int p_exp = 1);

}  // namespace fatpart
