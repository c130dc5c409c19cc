// Acceptance suite: one line per criterion, exit code = number of failures.

#include "fatpart/dse.hpp"
#include "fatpart/randomdata.hpp"
#include "fatpart/series.hpp"
#include "fatpart/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace fatpart;

namespace {

int g_failures = 0;

void criterion(const std::string& id, const std::string& text, bool pass,
               const std::string& detail = "") {
    std::printf("%s %-4s %s%s%s\n", pass ? "PASS" : "FAIL", id.c_str(), text.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

Partition P(const std::string& s) { return Partition::parse(s); }

std::vector<Partition> all_weights(int lo, int hi, int max_len = 0) {
    PartitionConstraints c;
    c.weight_min = lo;
    c.weight_max = hi;
    if (max_len > 0) c.max_length = max_len;
    return enumerate_partitions(c);
}

std::string summarize(const std::vector<VerificationReport>& rs) {
    long pass = 0;
    std::string first_fail;
    for (const auto& r : rs) {
        if (r.pass) {
            ++pass;
        } else if (first_fail.empty()) {
            first_fail = report_human(r);
        }
    }
    std::string out = std::to_string(pass) + "/" + std::to_string(rs.size()) + " sub-checks";
    if (!first_fail.empty()) out += "; first failure: " + first_fail;
    return out;
}

bool run_named(const std::string& name, const VerifyOptions& opt, std::string* detail) {
    auto rs = run_verify_case(name, opt);
    *detail = summarize(rs);
    return all_pass(rs);
}

// ---- criterion 1a: s_lambda(p(a)) = (a)_lambda s_lambda(p_inf), |lambda|<=8
bool crit_1a() {
    for (const Rat& a : {Rat(2), Rat(1, 2), Rat(-3)})
        for (const Partition& lam : all_weights(0, 8)) {
            Rat lhs = schur_from_power_sums(
                lam, Specialization::p_of(a).power_sums<Rat>(lam.weight()));
            if (lhs != content_pochhammer(a, lam) * schur_at_pinfty(lam)) return false;
        }
    return true;
}

// ---- 1b: s_lambda(J_l) = (l)_lambda s_lambda(p_inf), vanishing iff l(lambda) > l
bool crit_1b() {
    for (int N = 1; N <= 5; ++N)
        for (int l = 0; l <= N; ++l)
            for (const Partition& lam : all_weights(0, 8)) {
                Rat got = schur_of_matrix(lam, RatMat::projector(N, l));
                if (got != content_pochhammer(Rat(l), lam) * schur_at_pinfty(lam)) return false;
                if ((got == 0) != (lam.length() > l)) return false;
            }
    return true;
}

// ---- 1c: s_lambda(p) = (-1)^{|lambda|} s_{lambda^t}(-p), |lambda|<=10
bool crit_1c() {
    PowerSums<Rat> p = random_power_sums(0x1c1c, 10);
    PowerSums<Rat> mp = p;
    for (auto& v : mp.values) v = -v;
    for (const Partition& lam : all_weights(0, 10)) {
        PowerSums<Rat> a, b;
        a.values.assign(p.values.begin(), p.values.begin() + lam.weight());
        b.values.assign(mp.values.begin(), mp.values.begin() + lam.weight());
        Rat lhs = schur_from_power_sums(lam, a);
        Rat rhs = schur_from_power_sums(lam.conjugate(), b);
        if (lam.weight() % 2 != 0) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    return true;
}

// ---- 1e: character-map reconstruction, |lambda| <= 6, random rational 3x3
bool crit_1e() {
    RatMat X = random_rational_matrix(0x1e1e, 3);
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
        if (schur_of_matrix(lam, X) != schur_at_pinfty(lam) * sum) return false;
    }
    return true;
}

// ---- 1h: gauge invariance on gamma4/gamma5 with fixed vertex monodromies
bool crit_1h() {
    const int N = 2, cutoff = 6;
    RatMat A = random_invertible_matrix(0x1401, N);
    RatMat B = random_invertible_matrix(0x1402, N);
    RatMat C = random_invertible_matrix(0x1403, N);
    RatMat D = random_invertible_matrix(0x1404, N);
    Specialization f0 = random_explicit_spec(0x1405, cutoff);
    Specialization f1 = random_explicit_spec(0x1406, cutoff);

    auto series_for = [&](const std::string& graph, const CornerSpec& c1, const CornerSpec& cm1,
                          const CornerSpec& c2, const CornerSpec& cm2) {
        ModelConfig cfg;
        cfg.graph = builtin_graph(graph);
        cfg.N = N;
        cfg.cutoff = cutoff;
        cfg.face_specs = {f0, f1};
        cfg.assignment.N = N;
        cfg.assignment.corners[1] = c1;
        cfg.assignment.corners[-1] = cm1;
        cfg.assignment.corners[2] = c2;
        cfg.assignment.corners[-2] = cm2;
        return zu_mm_series(cfg).value;
    };

    // gamma4 vertices [1,-2] and [2,-1]: monodromies A and B, two factorizations
    Rat base = series_for("gamma4", CornerSpec::Explicit(A), CornerSpec::Identity(),
                          CornerSpec::Explicit(B), CornerSpec::Identity());
    Rat refac = series_for("gamma4", CornerSpec::Explicit(A * C.inverse()),
                           CornerSpec::Explicit(D), CornerSpec::Explicit(B * D.inverse()),
                           CornerSpec::Explicit(C));
    if (base != refac) return false;
    // gamma5 vertices [1] and [-1,2,-2]: same monodromy set {A, B}
    Rat other = series_for("gamma5", CornerSpec::Explicit(A), CornerSpec::Explicit(B),
                           CornerSpec::Identity(), CornerSpec::Identity());
    Rat other2 = series_for("gamma5", CornerSpec::Explicit(A),
                            CornerSpec::Explicit(B * C.inverse()), CornerSpec::Explicit(C),
                            CornerSpec::Identity());
    return base == other && other == other2;
}

// ---- criterion 4: classifier catalog
bool crit_4_classifier(std::string* detail) {
    EnsembleSpec sp1 = EnsembleSpec::parse("sp:k=1");
    Specialization p = random_explicit_spec(0x4444, 6);
    auto expect = [&](const std::string& label, const ModelConfig& cfg, bool want_exact,
                      bool* ok) {
        Solvability s = classify_solvability(cfg);
        bool good = s.solvable && s.exactly_solvable == want_exact;
        if (!good) *detail += label + " misclassified; ";
        *ok = *ok && good;
    };
    bool ok = true;

    ModelConfig g1;
    g1.graph = builtin_graph("gamma1");
    g1.N = 2;
    g1.cutoff = 6;
    g1.face_specs = {p};
    g1.assignment.N = 2;
    g1.assignment.corners[1] = CornerSpec::Ensemble(sp1);
    g1.assignment.corners[-1] = CornerSpec::J(1);
    g1.averaged_vertices[0] = sp1;
    expect("gamma1", g1, true, &ok);

    ModelConfig g2;
    g2.graph = builtin_graph("gamma2");
    g2.N = 2;
    g2.cutoff = 6;
    g2.face_specs = {p, Specialization::pinf()};
    g2.assignment.N = 2;
    g2.assignment.corners[1] = CornerSpec::Ensemble(sp1);
    g2.assignment.corners[-1] = CornerSpec::Identity();
    g2.averaged_vertices[0] = sp1;
    expect("gamma2", g2, true, &ok);

    ModelConfig g3;
    g3.graph = builtin_graph("gamma3", 2);
    g3.N = 2;
    g3.cutoff = 6;
    g3.face_specs = {p};
    g3.assignment.N = 2;
    g3.assignment.corners[-1] = CornerSpec::J(1);
    g3.assignment.corners[1] = CornerSpec::J(2);
    g3.assignment.corners[-2] = CornerSpec::Identity();
    g3.assignment.corners[2] = CornerSpec::Ensemble(sp1);
    g3.averaged_vertices[2] = sp1;
    expect("gamma3", g3, true, &ok);

    ModelConfig g1full = g1;
    g1full.assignment.corners[-1] = CornerSpec::Ensemble(sp1);
    g1full.averaged_vertices[1] = sp1;
    expect("gamma1full", g1full, false, &ok);

    ModelConfig star;
    star.graph = builtin_graph("gamma3", 2);
    star.N = 2;
    star.cutoff = 6;
    star.face_specs = {p};
    star.assignment.N = 2;
    star.assignment.corners[-1] = CornerSpec::Ensemble(sp1);
    star.assignment.corners[1] = CornerSpec::Ensemble(sp1);
    star.assignment.corners[-2] = CornerSpec::Identity();
    star.assignment.corners[2] = CornerSpec::Ensemble(sp1);
    star.averaged_vertices[0] = sp1;
    star.averaged_vertices[1] = sp1;
    star.averaged_vertices[2] = sp1;
    expect("star", star, false, &ok);

    ModelConfig torus;
    torus.graph.n = 2;
    torus.graph.faces = {{1, 2, -1, -2}};
    torus.graph.vertices = {{1, 2, -1, -2}};
    torus.N = 2;
    torus.cutoff = 4;
    torus.face_specs = {Specialization::pinf()};
    torus.assignment.N = 2;
    for (int lab : {1, 2, -1, -2}) torus.assignment.corners[lab] = CornerSpec::Identity();
    expect("torus", torus, false, &ok);
    return ok;
}

// ---- criterion 5: determinism of reports
bool crit_5(std::string* detail) {
    VerifyOptions a;
    a.samples = 2000;
    a.threads = 1;
    VerifyOptions b = a;
    b.threads = 4;
    for (const std::string& name : {"eq-I-gamma1", "chain-equalities", "schur-mean-sp"}) {
        auto ra = run_verify_case(name, a);
        auto rb = run_verify_case(name, b);
        auto rc = run_verify_case(name, a);
        if (ra.size() != rb.size() || ra.size() != rc.size()) {
            *detail = name + ": report counts differ";
            return false;
        }
        for (size_t i = 0; i < ra.size(); ++i) {
            if (report_record(ra[i]) != report_record(rb[i])) {
                *detail = name + ": records differ between thread caps";
                return false;
            }
            if (report_record(ra[i]) != report_record(rc[i])) {
                *detail = name + ": records differ between reruns";
                return false;
            }
        }
    }
    return true;
}

long elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;  // acceptance-scale defaults per case
    std::string detail;

    criterion("1a", "s_lambda(p(a)) = (a)_lambda s_lambda(p_inf), |lambda|<=8, a in {2,1/2,-3}",
              crit_1a());
    criterion("1b", "s_lambda(J_l) = (l)_lambda s_lambda(p_inf), 0<=l<=N<=5, vanishing iff l(lambda)>l",
              crit_1b());
    criterion("1c", "s_lambda(p) = (-1)^{|lambda|} s_{lambda^t}(-p), |lambda|<=10", crit_1c());
    detail.clear();
    criterion("1d", "Cauchy-Littlewood residual 0 through degree 6",
              run_named("cl-identity", opt, &detail), detail);
    criterion("1e", "character-map reconstruction, |lambda|<=6", crit_1e());
    detail.clear();
    criterion("1f", "dse weight identity incl. pinned 1/2 and 1/80",
              run_named("dse-weight", opt, &detail), detail);
    detail.clear();
    criterion("1g", "even-part/fat duality per weight <= 10",
              run_named("orthmm-duality", opt, &detail), detail);
    criterion("1h", "gauge invariance on gamma4/gamma5, weight <= 6", crit_1h());

    detail.clear();
    criterion("2a", "Sp(2), Sp(4) Schur averages vs closed form",
              run_named("schur-mean-sp", opt, &detail), detail);
    detail.clear();
    criterion("2b", "O(3), O(4) Schur averages vs closed form (pins the length bound)",
              run_named("schur-mean-orth", opt, &detail), detail);
    detail.clear();
    criterion("2c", "qGin(2), L in {0,1}: <s_lambda det^L> vs N^{-|lambda|}(N+L)_lambda",
              run_named("schur-mean-qgin", opt, &detail), detail);

    detail.clear();
    bool a3 = run_named("eq-I-gamma1", opt, &detail);
    std::string d2;
    bool b3 = run_named("eq-I-gamma2", opt, &d2);
    criterion("3a", "averaging relation on gamma1 and gamma2 incl. RHS values 1 and 1/2", a3 && b3,
              detail + " | " + d2);
    detail.clear();
    criterion("3b", "graph integral vs exactly truncated series on gamma1",
              run_named("zu-mm-gamma1", opt, &detail), detail);
    detail.clear();
    criterion("3c", "chain configurations (1),(5),(8) pairwise and vs the exact series",
              run_named("chain-equalities", opt, &detail), detail);

    detail.clear();
    bool s1 = run_named("mixed-gamma1-sp", opt, &detail);
    std::string d3;
    bool s2 = run_named("borodin", opt, &d3);
    std::string d4;
    bool s3 = crit_4_classifier(&d4);
    criterion("4", "structural tau-series equalities and the classifier catalog", s1 && s2 && s3,
              d4.empty() ? detail + " | " + d3 : d4);

    detail.clear();
    criterion("5", "reports bit-identical across reruns and thread caps", crit_5(&detail), detail);

    std::printf("acceptance finished in %lds with %d failing criteria\n", elapsed_s(t0),
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
