#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace fatpart {

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// SplitMix64 stream. Per-sample substreams are keyed by (seed, sample index),
// so a Monte-Carlo run is reproducible regardless of how samples are
// distributed over workers.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : state_(mix64(seed)) {}

    static RngStream keyed(uint64_t seed, uint64_t index) {
        RngStream r(0);
        r.state_ = mix64(seed ^ mix64(index + 0x51a2b3c4d5e6f708ULL));
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in (0,1]
    double next_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // uniform in [lo,hi)
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Box-Muller, standard normal; explicit so results do not depend on the
    // standard library's distribution internals.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Fixed-order pairwise sum; the reduction tree depends only on the length.
double pairwise_sum(const double* data, size_t n);
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

// Worker cap: explicit argument wins, then FATPART_THREADS, then hardware.
int resolve_thread_count(int requested = 0);

struct McResult {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
};

// Evaluates fn(index) for index in [0,S) with per-sample keyed RNG handled by
// the caller, filling a value buffer that is reduced in fixed order. Bit-stable
// for any worker count.
McResult mc_run(long samples, const std::function<double(long)>& fn, int threads = 0);

// Same scheduling without the reduction.
void parallel_for_samples(long samples, const std::function<void(long)>& fn, int threads = 0);

}  // namespace fatpart
