#include "fatpart/randomdata.hpp"
#include "fatpart/symfun.hpp"

#include <doctest.h>

using namespace fatpart;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

PowerSums<Rat> const_ps(const Rat& a, int K) {
    PowerSums<Rat> ps;
    ps.values.assign(static_cast<size_t>(K), a);
    return ps;
}

std::vector<Partition> all_weights(int lo, int hi) {
    PartitionConstraints c;
    c.weight_min = lo;
    c.weight_max = hi;
    return enumerate_partitions(c);
}

// bialternant det[x_j^{lam_i - i + N}] / det[x_j^{N - i}], distinct eigenvalues
cplx bialternant(const Partition& lam, const std::vector<cplx>& xs) {
    const int N = static_cast<int>(xs.size());
    auto det = [&](const std::vector<int>& exps) {
        std::vector<cplx> m(static_cast<size_t>(N) * N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                m[static_cast<size_t>(i) * N + j] =
                    std::pow(xs[static_cast<size_t>(j)], exps[static_cast<size_t>(i)]);
        return det_in_place(m, N);
    };
    std::vector<int> num, den;
    for (int i = 1; i <= N; ++i) {
        num.push_back(lam.part(i) - i + N);
        den.push_back(N - i);
    }
    return det(num) / det(den);
}
}  // namespace

TEST_CASE("elementary schur sequences") {
    CHECK(elementary_schur(const_ps(Rat(0), 3), 3) ==
          std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
    PowerSums<Rat> pinf = Specialization::pinf().power_sums<Rat>(3);
    CHECK(elementary_schur(pinf, 3) == std::vector<Rat>{Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)});
    for (const Rat& a : {Rat(2), Rat(1, 2)}) {
        std::vector<Rat> h = elementary_schur(const_ps(a, 2), 2);
        CHECK(h[1] == a);
        CHECK(h[2] == a * (a + 1) / 2);
    }
    CHECK_THROWS_AS(elementary_schur(const_ps(Rat(1), 2), 3), std::invalid_argument);
}

TEST_CASE("jacobi-trudi evaluation") {
    CHECK(schur_from_power_sums(P("-"), const_ps(Rat(5), 0)) == Rat(1));
    PowerSums<Rat> pinf = Specialization::pinf().power_sums<Rat>(2);
    CHECK(schur_from_power_sums(P("1,1"), pinf) == Rat(1, 2));
    Rat a(7, 2);
    CHECK(schur_from_power_sums(P("2"), const_ps(a, 2)) == a * (a + 1) / 2);
    CHECK(schur_from_power_sums(P("2"), const_ps(a, 2)) ==
          content_pochhammer(a, P("2")) * schur_at_pinfty(P("2")));
    CHECK_THROWS_AS(schur_from_power_sums(P("2,1"), const_ps(a, 2)), std::invalid_argument);
}

TEST_CASE("schur from eigenvalues") {
    cplx x(0.7, 0.2);
    CHECK(schur_from_eigenvalues(P("1"), {x}) == x);
    CHECK(schur_from_eigenvalues(P("1,1"), {x}) == cplx(0.0, 0.0));
    cplx x1(0.3, -0.4), x2(1.1, 0.6);
    cplx want = std::pow(x1 * x2, 2);
    CHECK(std::abs(schur_from_eigenvalues(P("2,2"), {x1, x2}) - want) < 1e-12);
}

TEST_CASE("eigenvalue route agrees with the bialternant oracle") {
    RngStream rng(404);
    for (int rep = 0; rep < 6; ++rep) {
        std::vector<cplx> xs;
        for (int i = 0; i < 4; ++i)
            xs.emplace_back(rng.next_uniform(-1, 1), rng.next_uniform(-1, 1));
        for (const Partition& lam : all_weights(1, 6)) {
            if (lam.length() > 4) continue;
            cplx a = schur_from_eigenvalues(lam, xs);
            cplx b = bialternant(lam, xs);
            CHECK(std::abs(a - b) < 1e-9);
        }
    }
}

TEST_CASE("schur of matrices") {
    RatMat X = random_rational_matrix(11, 3);
    CHECK(schur_of_matrix(P("1"), X) == X.trace());
    // J_l spectrum: s_lambda(J_l) = (l)_lambda s_lambda(p_inf)
    for (int N : {2, 4})
        for (int l = 0; l <= N; ++l)
            for (const Partition& lam : all_weights(0, 5)) {
                Rat got = schur_of_matrix(lam, RatMat::projector(N, l));
                CHECK(got == content_pochhammer(Rat(l), lam) * schur_at_pinfty(lam));
                CHECK((got == 0) == (lam.length() > l));
            }
    CHECK(schur_of_matrix(P("1,1"), RatMat::identity(2)) == Rat(1));
}

TEST_CASE("matrix and eigenvalue routes agree on random complex matrices") {
    RngStream rng(505);
    for (int rep = 0; rep < 4; ++rep) {
        Eigen::MatrixXcd X(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                X(i, j) = cplx(rng.next_gaussian(), rng.next_gaussian()) * 0.4;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(X, false);
        std::vector<cplx> xs(es.eigenvalues().data(), es.eigenvalues().data() + 4);
        for (const Partition& lam : all_weights(1, 6)) {
            if (lam.length() > 4) continue;
            CHECK(std::abs(schur_of_matrix(lam, X) - schur_from_eigenvalues(lam, xs)) < 1e-9);
        }
    }
}

TEST_CASE("specializations") {
    PowerSums<Rat> pinf = Specialization::pinf().power_sums<Rat>(4);
    CHECK(pinf.values == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
    PowerSums<Rat> pa = Specialization::p_of(Rat(2)).power_sums<Rat>(3);
    CHECK(pa.values == std::vector<Rat>{Rat(2), Rat(2), Rat(2)});
    PowerSums<Rat> mw = Specialization::miwa_vars(-1, {Rat(1, 2)}).power_sums<Rat>(3);
    CHECK(mw.values == std::vector<Rat>{Rat(-1, 2), Rat(-1, 4), Rat(-1, 8)});

    for (const std::string& s :
         {"pinf", "pa:5/2", "miwa:+:3/10,7/10", "miwa:-:1/2", "scale:2:pinf", "explicit:1,0,0,0"}) {
        Specialization sp = Specialization::parse(s);
        CHECK(Specialization::parse(sp.to_string()) == sp);
    }
    CHECK(Specialization::parse("pa:2.5") == Specialization::p_of(Rat(5, 2)));
    CHECK(Specialization::parse("scale:2:scale:3:pinf").scale == Rat(6));
    CHECK_THROWS_AS(Specialization::parse("nope"), std::invalid_argument);

    // scaled(c, .) multiplies termwise
    Specialization sc = Specialization::scaled(Rat(2), Specialization::p_of(Rat(3)));
    CHECK(sc.power_sums<Rat>(2).values == std::vector<Rat>{Rat(6), Rat(6)});

    CHECK(Specialization::miwa_vars(1, {Rat(1), Rat(2)}).length_bound() == 2);
    CHECK(Specialization::scaled(Rat(3), Specialization::miwa_vars(1, {Rat(1)})).length_bound() ==
          3);
    CHECK(Specialization::miwa_vars(-1, {Rat(1), Rat(2)}).width_bound() == 2);
    CHECK(Specialization::p_of(Rat(3)).length_bound() == 3);
    CHECK_FALSE(Specialization::pinf().length_bound().has_value());
}

TEST_CASE("homogeneity under variable rescaling") {
    // rescaling the underlying variables by c sends p_k to c^k p_k and
    // multiplies s_lambda by c^{|lambda|}
    PowerSums<Rat> p = random_power_sums(606, 8);
    Rat c(-3, 5);
    PowerSums<Rat> geom = p;
    for (int k = 1; k <= geom.K(); ++k)
        geom.values[static_cast<size_t>(k - 1)] *= rat_pow(c, k);
    for (const Partition& lam : all_weights(0, 8)) {
        PowerSums<Rat> a, b;
        a.values.assign(geom.values.begin(), geom.values.begin() + lam.weight());
        b.values.assign(p.values.begin(), p.values.begin() + lam.weight());
        CHECK(schur_from_power_sums(lam, a) ==
              rat_pow(c, lam.weight()) * schur_from_power_sums(lam, b));
    }
}

TEST_CASE("conjugation-negation symmetry") {
    PowerSums<Rat> p = random_power_sums(707, 10);
    PowerSums<Rat> mp = p;
    for (auto& v : mp.values) v = -v;
    for (const Partition& lam : all_weights(0, 10)) {
        PowerSums<Rat> pc, mc;
        pc.values.assign(p.values.begin(), p.values.begin() + lam.weight());
        mc.values.assign(mp.values.begin(), mp.values.begin() + lam.weight());
        Rat lhs = schur_from_power_sums(lam, pc);
        Rat rhs = schur_from_power_sums(lam.conjugate(), mc);
        if (lam.weight() % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("characters and the character map") {
    CHECK(mn_character(P("2,1"), P("1,1,1")) == 2);
    CHECK(mn_character(P("2,1"), P("3")) == -1);
    CHECK(mn_character(P("2,1"), P("2,1")) == 0);
    CHECK(cycle_type_order(P("1,1")) == 2);
    CHECK(cycle_type_order(P("3,1")) == 3);
    CHECK(cycle_type_order(P("2,2")) == 8);

    CHECK(phi_character(P("1"), P("1")) == Rat(1));
    CHECK(phi_character(P("2"), P("1,1")) == Rat(1));
    CHECK(phi_character(P("2"), P("2")) == Rat(1));
    CHECK_THROWS_AS(phi_character(P("2"), P("1")), std::invalid_argument);

    // reconstruction: s_lambda(X) = s_lambda(p_inf) sum_mu phi_lambda(mu) prod_i tr(X^mu_i)
    RatMat X = random_rational_matrix(88, 3);
    for (const Partition& lam : all_weights(1, 6)) {
        std::vector<Rat> tr = X.power_sums(lam.weight());
        PartitionConstraints c;
        c.weight_min = c.weight_max = lam.weight();
        Rat sum = 0;
        for (const Partition& mu : enumerate_partitions(c)) {
            Rat prod = 1;
            for (int i = 1; i <= mu.length(); ++i) prod *= tr[static_cast<size_t>(mu.part(i) - 1)];
            sum += phi_character(lam, mu) * prod;
        }
        CHECK(schur_of_matrix(lam, X) == schur_at_pinfty(lam) * sum);
    }
}

TEST_CASE("cauchy-littlewood residual vanishes exactly") {
    RatMat zero(2);
    CHECK(cauchy_littlewood_check(zero, random_power_sums(1, 4), 4) == Rat(0));
    RatMat one(1);
    one(0, 0) = Rat(2, 3);
    CHECK(cauchy_littlewood_check(one, random_power_sums(2, 4), 4) == Rat(0));
    CHECK(cauchy_littlewood_check(random_rational_matrix(3, 2), random_power_sums(4, 6), 6) ==
          Rat(0));
}
