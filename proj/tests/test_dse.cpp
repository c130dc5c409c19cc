#include "fatpart/dse.hpp"
#include "fatpart/randomdata.hpp"

#include <doctest.h>

#include <map>

using namespace fatpart;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}

TEST_CASE("dse weights match the hand-derived values") {
    CHECK(dse_weight(P("-"), 1) == Rat(1));
    CHECK(dse_weight(P("1"), 2) == Rat(1, 2));
    CHECK(dse_weight(P("2,1"), 2) == Rat(1, 80));
}

TEST_CASE("dse weight equals the fat schur value at p_inf") {
    for (int N = 1; N <= 4; ++N) {
        PartitionConstraints c;
        c.weight_min = 0;
        c.weight_max = 8;
        c.max_length = N;
        for (const Partition& lam : enumerate_partitions(c)) {
            CHECK(dse_weight(lam, N) == schur_at_pinfty(fatten(lam)));
            DSEPoint pt = DSEPoint::from(lam, N);
            for (size_t i = 0; i + 1 < pt.x.size(); ++i) CHECK(pt.x[i] - pt.x[i + 1] >= 2);
            CHECK(pt.x.back() >= 1);
        }
    }
    CHECK_THROWS_AS(dse_weight(P("1,1,1"), 2), std::invalid_argument);
}

TEST_CASE("borodin partition function over two Miwa variables") {
    Rat x1(1, 2), x2(1, 3);
    for (int m = 1; m <= 4; ++m) {
        SeriesValue sv = dse_partition_function(
            DseKind::borodin, Specialization::miwa_vars(1, {x1, x2}), 1, 2 * m);
        Rat want = 0;
        for (int j = 0; j <= m; ++j) want += rat_pow(x1 * x2, j);
        CHECK(sv.value == want);
    }
}

TEST_CASE("star partition function basics") {
    CHECK(dse_partition_function(DseKind::star, Specialization::pinf(), 2, 0, 2).value == Rat(1));
    // monotone in the cutoff for nonnegative weights
    Rat prev = 0;
    for (int cutoff : {0, 2, 4, 6, 8}) {
        Rat v = dse_partition_function(DseKind::borodin, Specialization::pinf(), 2, cutoff).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("dse sampling: point mass") {
    // one Miwa variable: s_{(m,m)} of a single variable vanishes, so only the
    // empty partition carries weight
    auto draws = dse_sample(DseKind::borodin, Specialization::miwa_vars(1, {Rat(1, 2)}), 1, 10,
                            200, 17);
    for (const Partition& lam : draws) CHECK(lam == P("-"));
}

TEST_CASE("dse sampling: geometric frequencies pass a chi-square check") {
    // weights (x1 x2)^m = 4^{-m}
    const long S = 10000;
    auto draws = dse_sample(DseKind::borodin,
                            Specialization::miwa_vars(1, {Rat(1, 2), Rat(1, 2)}), 1, 10, S, 99);
    std::map<int, long> counts;
    for (const Partition& lam : draws) ++counts[lam.part(1)];
    // bins m = 0,1,2 and a merged tail m >= 3
    double Z = 0.0;
    for (int m = 0; m <= 5; ++m) Z += std::pow(0.25, m);
    double chi2 = 0.0;
    double tail_expect = 0.0, tail_count = 0.0;
    for (int m = 0; m <= 5; ++m) {
        double expect = S * std::pow(0.25, m) / Z;
        long got = counts.count(m) ? counts[m] : 0;
        if (m < 3) {
            chi2 += (got - expect) * (got - expect) / expect;
        } else {
            tail_expect += expect;
            tail_count += static_cast<double>(got);
        }
    }
    chi2 += (tail_count - tail_expect) * (tail_count - tail_expect) / tail_expect;
    CHECK(chi2 < 16.27);  // 99.9% quantile, 3 degrees of freedom
}

TEST_CASE("dse sampling is deterministic and validates weights") {
    auto a = dse_sample(DseKind::borodin, Specialization::pinf(), 2, 6, 100, 5);
    auto b = dse_sample(DseKind::borodin, Specialization::pinf(), 2, 6, 100, 5);
    CHECK(a == b);
    // p = (0,1,0,...) gives s_(1,1) = -1/2: not a probability measure
    CHECK_THROWS_AS(dse_sample(DseKind::borodin,
                               Specialization::explicit_ps({Rat(0), Rat(1), Rat(0), Rat(0),
                                                            Rat(0), Rat(0)}),
                               2, 6, 10, 1),
                    std::domain_error);
}
