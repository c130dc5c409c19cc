#include "fatpart/dse.hpp"

#include "fatpart/rng.hpp"

namespace fatpart {

DSEPoint DSEPoint::from(const Partition& lam, int N) {
    if (lam.length() > N)
        throw std::invalid_argument("dse: partition length exceeds N");
    DSEPoint pt;
    pt.lambda = lam;
    for (int i = 1; i <= N; ++i) pt.x.push_back(lam.part(i) - 2L * i + 1 + 2L * N);
    for (size_t i = 0; i + 1 < pt.x.size(); ++i)
        if (pt.x[i] - pt.x[i + 1] < 2) throw std::logic_error("dse coordinates lost the hard core");
    return pt;
}

Rat dse_weight(const Partition& lam, int N) {
    DSEPoint pt = DSEPoint::from(lam, N);
    Rat num = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Rat d(pt.x[static_cast<size_t>(i)] - pt.x[static_cast<size_t>(j)]);
            num *= d * d * (d * d - 1);
        }
    Int den = 1;
    for (int i = 0; i < N; ++i) {
        long xi = pt.x[static_cast<size_t>(i)];
        den *= factorial(xi) * factorial(xi - 1);
    }
    return num / Rat(den);
}

std::vector<std::pair<Partition, Rat>> dse_terms(DseKind kind, const Specialization& p, int N,
                                                 int cutoff, int p_exp) {
    if (cutoff < 0 || cutoff > kDegreeCap) throw std::invalid_argument("cutoff out of range");
    const int half_len = kind == DseKind::borodin ? N : N / 2;
    Specialization eff = kind == DseKind::star ? Specialization::scaled(Rat(N), p) : p;
    PowerSums<Rat> ps = eff.power_sums<Rat>(cutoff);

    PartitionConstraints pc;
    pc.weight_min = 0;
    pc.weight_max = cutoff / 2;
    pc.max_length = half_len;
    std::vector<std::pair<Partition, Rat>> out;
    for (const Partition& mu : enumerate_partitions(pc, std::max(cutoff, kEnumerationWeightCap))) {
        Partition fat = fatten(mu);
        if (fat.weight() > cutoff) continue;
        PowerSums<Rat> cut;
        cut.values.assign(ps.values.begin(), ps.values.begin() + fat.weight());
        Rat term = schur_from_power_sums(fat, cut);
        if (kind == DseKind::star && term != 0)
            term *= rat_pow(rat_pow(Rat(N), fat.weight()) * schur_at_pinfty(fat),
                            -static_cast<long>(p_exp));
        if (term != 0) out.emplace_back(mu, std::move(term));
    }
    return out;
}

SeriesValue dse_partition_function(DseKind kind, const Specialization& p, int N, int cutoff,
                                   int p_exp) {
    SeriesValue sv;
    sv.max_weight = cutoff;
    for (const auto& [mu, t] : dse_terms(kind, p, N, cutoff, p_exp)) {
        sv.value += t;
        ++sv.term_count;
    }
    Specialization eff = kind == DseKind::star ? Specialization::scaled(Rat(N), p) : p;
    if (auto wb = eff.width_bound()) {
        long lb = kind == DseKind::borodin ? N : N / 2;
        if (auto b = eff.length_bound()) lb = std::min<long>(lb, *b / 2);
        sv.truncated_exactly = static_cast<long>(cutoff) >= 2 * lb * *wb;
    }
    return sv;
}

std::vector<Partition> dse_sample(DseKind kind, const Specialization& p, int N, int cutoff,
                                  long count, uint64_t seed, int p_exp) {
    auto terms = dse_terms(kind, p, N, cutoff, p_exp);
    // Zero-weight states simply never occur, but a negative weight means the
    // data is not a probability measure.
    for (const auto& [mu, w] : terms)
        if (w < 0)
            throw std::domain_error("dse_sample: negative weight at " + mu.to_string() + " (" +
                                    format_rational(w) + ")");
    if (terms.empty()) throw std::domain_error("dse_sample: empty state space");
    std::vector<double> cum;
    cum.reserve(terms.size());
    double total = 0.0;
    for (const auto& [mu, w] : terms) {
        total += to_double(w);
        cum.push_back(total);
    }
    if (total <= 0.0) throw std::domain_error("dse_sample: zero total weight");
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(count));
    RngStream rng(seed);
    for (long i = 0; i < count; ++i) {
        double u = rng.next_unit() * total;
        size_t lo = static_cast<size_t>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
        if (lo >= terms.size()) lo = terms.size() - 1;
        out.push_back(terms[lo].first);
    }
    return out;
}

}  // namespace fatpart
