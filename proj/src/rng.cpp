#include "fatpart/rng.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace fatpart {

double pairwise_sum(const double* data, size_t n) {
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = data[0];
        for (size_t i = 1; i < n; ++i) s += data[i];
        return s;
    }
    size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

int resolve_thread_count(int requested) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("FATPART_THREADS")) n = std::atoi(env);
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return n;
}

void parallel_for_samples(long samples, const std::function<void(long)>& fn, int threads) {
    if (samples <= 0) throw std::invalid_argument("parallel_for_samples: samples must be positive");
    int nw = resolve_thread_count(threads);
    if (nw > samples) nw = static_cast<int>(samples);
    if (nw <= 1) {
        for (long i = 0; i < samples; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    const long chunk = 256;
    auto worker = [&]() {
        for (;;) {
            long base = next.fetch_add(chunk);
            if (base >= samples) return;
            long end = std::min(samples, base + chunk);
            for (long i = base; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nw));
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

McResult mc_run(long samples, const std::function<double(long)>& fn, int threads) {
    if (samples <= 0) throw std::invalid_argument("mc_run: samples must be positive");
    std::vector<double> vals(static_cast<size_t>(samples));
    parallel_for_samples(samples, [&](long i) { vals[static_cast<size_t>(i)] = fn(i); }, threads);
    double sum = pairwise_sum(vals);
    double mean = sum / static_cast<double>(samples);
    std::vector<double> sq(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
        double d = vals[i] - mean;
        sq[i] = d * d;
    }
    double var = samples > 1 ? pairwise_sum(sq) / static_cast<double>(samples - 1) : 0.0;
    McResult out;
    out.mean = mean;
    out.stderr_ = std::sqrt(var / static_cast<double>(samples));
    out.samples = samples;
    return out;
}

}  // namespace fatpart
