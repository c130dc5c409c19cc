#include "fatpart/verify.hpp"

#include "fatpart/dse.hpp"
#include "fatpart/randomdata.hpp"
#include "fatpart/ribbon.hpp"
#include "fatpart/series.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace fatpart {

using nlohmann::json;

std::string report_record(const VerificationReport& r) {
    json j;
    j["case"] = r.case_name;
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    if (r.exact_value) {
        j["exact"] = format_rational(*r.exact_value);
        j["exact_double"] = to_double(*r.exact_value);
    } else {
        j["exact"] = nullptr;
    }
    if (r.mc) {
        j["mc"] = {{"mean", r.mc->mean},
                   {"stderr", r.mc->stderr_},
                   {"samples", r.mc->samples},
                   {"seed", r.mc->seed}};
    } else {
        j["mc"] = nullptr;
    }
    j["pass"] = r.pass;
    j["criterion"] = r.criterion;
    j["seed"] = r.seed;
    return j.dump();
}

std::string report_human(const VerificationReport& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS " : "FAIL ") << r.case_name;
    for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
    if (r.exact_value)
        out << "  exact=" << format_rational(*r.exact_value) << " (" << to_double(*r.exact_value)
            << ")";
    if (r.mc) out << "  mc=" << r.mc->mean << "+-" << r.mc->stderr_ << " S=" << r.mc->samples;
    out << "  [" << r.criterion << "]  " << r.runtime_ms << "ms";
    return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

uint64_t subseed(uint64_t base, uint64_t idx) { return base ^ mix64(0xabcd0000 + idx); }

long pick_samples(const VerifyOptions& opt, long full, long quick) {
    if (opt.samples > 0) return opt.samples;
    return opt.quick ? quick : full;
}

std::string dstr(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

// ---------- shared exact-case plumbing ----------

VerificationReport exact_report(std::string name,
                                std::vector<std::pair<std::string, std::string>> params,
                                const Rat& residual, std::string criterion, uint64_t seed,
                                Clock::time_point t0) {
    VerificationReport r;
    r.case_name = std::move(name);
    r.parameters = std::move(params);
    r.exact_value = residual;
    r.pass = residual == 0;
    r.criterion = std::move(criterion);
    r.seed = seed;
    r.runtime_ms = ms_since(t0);
    return r;
}

Rat abs_rat(Rat q) { return q < 0 ? -q : q; }

// ---------- model configuration builders ----------

ModelConfig gamma1_mixed(const EnsembleSpec& e, int l, const Specialization& p, int N, int cutoff) {
    ModelConfig cfg;
    cfg.graph = builtin_graph("gamma1");
    cfg.N = N;
    cfg.cutoff = cutoff;
    cfg.face_specs = {p};
    cfg.assignment.N = N;
    cfg.assignment.corners[1] = CornerSpec::Ensemble(e);
    cfg.assignment.corners[-1] = CornerSpec::J(l);
    cfg.averaged_vertices[0] = e;
    return cfg;
}

ModelConfig gamma2_mixed(const EnsembleSpec& e, const Specialization& p1, const Specialization& p2,
                         int N, int cutoff) {
    ModelConfig cfg;
    cfg.graph = builtin_graph("gamma2");
    cfg.N = N;
    cfg.cutoff = cutoff;
    cfg.face_specs = {p1, p2};
    cfg.assignment.N = N;
    cfg.assignment.corners[1] = CornerSpec::Ensemble(e);
    cfg.assignment.corners[-1] = CornerSpec::Identity();
    cfg.averaged_vertices[0] = e;
    return cfg;
}

ModelConfig gamma3_mixed(int l1, int l2, const EnsembleSpec& e, const Specialization& p, int N,
                         int cutoff) {
    ModelConfig cfg;
    cfg.graph = builtin_graph("gamma3", 2);
    cfg.N = N;
    cfg.cutoff = cutoff;
    cfg.face_specs = {p};
    cfg.assignment.N = N;
    cfg.assignment.corners[-1] = CornerSpec::J(l1);
    cfg.assignment.corners[1] = CornerSpec::J(l2);
    cfg.assignment.corners[-2] = CornerSpec::Identity();
    cfg.assignment.corners[2] = CornerSpec::Ensemble(e);
    cfg.averaged_vertices[2] = e;
    return cfg;
}

ModelConfig gamma3_star(const EnsembleSpec& e, const Specialization& p, int N, int cutoff) {
    ModelConfig cfg;
    cfg.graph = builtin_graph("gamma3", 2);
    cfg.N = N;
    cfg.cutoff = cutoff;
    cfg.face_specs = {p};
    cfg.assignment.N = N;
    cfg.assignment.corners[-1] = CornerSpec::Ensemble(e);
    cfg.assignment.corners[1] = CornerSpec::Ensemble(e);
    cfg.assignment.corners[-2] = CornerSpec::Identity();
    cfg.assignment.corners[2] = CornerSpec::Ensemble(e);
    cfg.averaged_vertices[0] = e;
    cfg.averaged_vertices[1] = e;
    cfg.averaged_vertices[2] = e;
    return cfg;
}

// the three section-4.2 chain realizations at N = 2, l = 1, a = 1/2
ModelConfig chain_config(int which, const Specialization& miwa_p, const Rat& a, int l, int N,
                         int cutoff, int* det_face) {
    ModelConfig cfg;
    cfg.N = N;
    cfg.cutoff = cutoff;
    cfg.assignment.N = N;
    EnsembleSpec sp;
    sp.kind = EnsembleSpec::Kind::haar_symplectic;
    sp.k = N / 2;
    if (which == 1) {
        cfg.graph = builtin_graph("gamma4");  // faces [[1,2],[-1,-2]], vertices [[1,-2],[2,-1]]
        cfg.face_specs = {miwa_p, Specialization::p_of(a)};
        cfg.assignment.corners[1] = CornerSpec::Ensemble(sp);
        cfg.assignment.corners[2] = CornerSpec::Identity();
        cfg.assignment.corners[-1] = CornerSpec::J(l);
        cfg.assignment.corners[-2] = CornerSpec::Identity();
        cfg.averaged_vertices[0] = sp;
        *det_face = 1;
    } else if (which == 5) {
        cfg.graph = builtin_graph("gamma5");  // faces [[1,-1,2],[-2]], vertices [[1],[-1,2,-2]]
        cfg.face_specs = {miwa_p, Specialization::p_of(a)};
        cfg.assignment.corners[1] = CornerSpec::Ensemble(sp);
        cfg.assignment.corners[-1] = CornerSpec::Identity();
        cfg.assignment.corners[2] = CornerSpec::Identity();
        cfg.assignment.corners[-2] = CornerSpec::J(l);
        cfg.averaged_vertices[0] = sp;
        *det_face = 1;
    } else if (which == 8) {
        cfg.graph = builtin_graph("gamma5");
        cfg.face_specs = {Specialization::p_of(a), miwa_p};
        cfg.assignment.corners[1] = CornerSpec::Ensemble(sp);
        cfg.assignment.corners[-1] = CornerSpec::J(l);
        cfg.assignment.corners[2] = CornerSpec::Identity();
        cfg.assignment.corners[-2] = CornerSpec::Identity();
        cfg.averaged_vertices[0] = sp;
        *det_face = 0;
    } else {
        throw std::invalid_argument("chain_config: which must be 1, 5 or 8");
    }
    return cfg;
}

// ---------- ensemble sweeps ----------

std::vector<VerificationReport> sweep_ensemble(const std::string& case_name, const EnsembleSpec& e,
                                               int max_weight, bool fat_only, long S,
                                               const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    std::vector<Partition> lams;
    if (opt.lambda) {
        lams = {*opt.lambda};
    } else {
        PartitionConstraints pc;
        pc.weight_min = fat_only ? 0 : 1;
        pc.weight_max = max_weight;
        pc.max_length = e.matrix_order();
        if (fat_only) pc.filter = PartitionConstraints::Filter::fat;
        lams = enumerate_partitions(pc);
    }
    uint64_t idx = 0;
    for (const Partition& lam : lams) {
        auto t0 = Clock::now();
        uint64_t seed = subseed(opt.seed, idx++);
        Rat cf = closed_form_schur_average(e, lam);
        MCEstimate mc = mc_schur_average(e, lam, S, seed, opt.threads);
        double tol = std::max(4.0 * mc.stderr_, 0.05);
        VerificationReport r;
        r.case_name = case_name;
        r.parameters = {{"ensemble", e.to_string()}, {"lambda", lam.to_string()}};
        r.exact_value = cf;
        r.mc = mc;
        r.pass = std::abs(mc.mean - to_double(cf)) <= tol;
        r.criterion = "|mc - closed_form| <= max(4*stderr, 0.05)";
        r.seed = seed;
        r.runtime_ms = ms_since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------- individual cases ----------

std::vector<VerificationReport> case_schur_mean_sp(const VerifyOptions& opt) {
    long S = pick_samples(opt, 100000, 20000);
    std::vector<VerificationReport> out;
    std::vector<int> ks = opt.k ? std::vector<int>{*opt.k} : std::vector<int>{1, 2};
    for (int k : ks) {
        EnsembleSpec e;
        e.kind = EnsembleSpec::Kind::haar_symplectic;
        e.k = k;
        auto part = sweep_ensemble("schur-mean-sp", e, 6, false, S, opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<VerificationReport> case_schur_mean_orth(const VerifyOptions& opt) {
    long S = pick_samples(opt, 100000, 20000);
    std::vector<VerificationReport> out;
    std::vector<int> Ns = opt.N ? std::vector<int>{*opt.N} : std::vector<int>{3, 4};
    for (int N : Ns) {
        EnsembleSpec e;
        e.kind = EnsembleSpec::Kind::haar_orthogonal;
        e.N = N;
        auto part = sweep_ensemble("schur-mean-orth", e, 6, false, S, opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<VerificationReport> case_schur_mean_qgin(const VerifyOptions& opt) {
    long S = pick_samples(opt, 100000, 20000);
    std::vector<VerificationReport> out;
    std::vector<long> Ls = opt.L ? std::vector<long>{*opt.L} : std::vector<long>{0, 1};
    for (long L : Ls) {
        EnsembleSpec e;
        e.kind = EnsembleSpec::Kind::quaternion_ginibre;
        e.N = opt.N.value_or(2);
        e.L = L;
        auto part = sweep_ensemble("schur-mean-qgin", e, 4, true, S, opt);
        for (auto& r : part) r.parameters.emplace_back("L", std::to_string(L));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<VerificationReport> eq_I_case(const std::string& case_name, const std::string& graph,
                                          const std::vector<std::vector<Partition>>& lam_sets,
                                          const VerifyOptions& opt) {
    long S = pick_samples(opt, 200000, 40000);
    const int N = 2;
    RibbonGraph g = builtin_graph(graph);
    CornerAssignment a;
    a.N = N;
    for (int e = 1; e <= g.n; ++e) {
        a.corners[e] = CornerSpec::Identity();
        a.corners[-e] = CornerSpec::Identity();
    }
    std::vector<VerificationReport> out;
    uint64_t idx = 0;
    for (const auto& lams : lam_sets) {
        auto t0 = Clock::now();
        uint64_t seed = subseed(opt.seed, 100 + idx++);
        RelationCheck rc = schur_average_relation_check(g, a, lams, S, seed, opt.threads);
        VerificationReport r;
        r.case_name = case_name;
        std::string ls;
        for (size_t i = 0; i < lams.size(); ++i) ls += (i ? "|" : "") + lams[i].to_string();
        r.parameters = {{"graph", graph}, {"lambdas", ls}, {"N", std::to_string(N)}};
        r.exact_value = rc.rhs;
        r.mc = rc.mc;
        r.pass = rc.pass;
        r.criterion = "|mc - exact| <= max(4*stderr, 1e-9)";
        r.seed = seed;
        r.runtime_ms = ms_since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> case_eq_I_gamma1(const VerifyOptions& opt) {
    return eq_I_case("eq-I-gamma1", "gamma1",
                     {{Partition::parse("1")}, {Partition::parse("2")}, {Partition::parse("1,1")}},
                     opt);
}

std::vector<VerificationReport> case_eq_I_gamma2(const VerifyOptions& opt) {
    return eq_I_case("eq-I-gamma2", "gamma2",
                     {{Partition::parse("1"), Partition::parse("1")},
                      {Partition::parse("2"), Partition::parse("2")},
                      {Partition::parse("1,1"), Partition::parse("1,1")},
                      {Partition::parse("1"), Partition::parse("2")},
                      {Partition::parse("2"), Partition::parse("1,1")}},
                     opt);
}

std::vector<VerificationReport> case_zu_mm_gamma1(const VerifyOptions& opt) {
    long S = pick_samples(opt, 200000, 40000);
    auto t0 = Clock::now();
    const int N = 2;
    ModelConfig cfg;
    cfg.graph = builtin_graph("gamma1");
    cfg.N = N;
    cfg.cutoff = 6;
    cfg.face_specs = {Specialization::miwa_vars(-1, {Rat(3, 10)})};
    cfg.assignment.N = N;
    cfg.assignment.corners[1] = CornerSpec::J(1);
    cfg.assignment.corners[-1] = CornerSpec::Identity();
    SeriesValue sv = zu_mm_series(cfg);

    uint64_t seed = subseed(opt.seed, 7);
    McStats stats;
    MCEstimate mc = mc_partition_function(cfg, IntegrandSpec{}, S, seed, &stats, opt.threads);
    VerificationReport r;
    r.case_name = "zu-mm-gamma1";
    r.parameters = {{"N", "2"},
                    {"corners", "J1,identity"},
                    {"face", cfg.face_specs[0].to_string()},
                    {"truncated_exactly", sv.truncated_exactly ? "true" : "false"}};
    r.exact_value = sv.value;
    r.mc = mc;
    r.pass = std::abs(mc.mean - sv.as_double()) <= std::max(4.0 * mc.stderr_, 1e-9) &&
             sv.truncated_exactly;
    r.criterion = "|mc - exact series| <= 4*stderr, series exactly truncated";
    r.seed = seed;
    r.runtime_ms = ms_since(t0);
    return {r};
}

std::vector<VerificationReport> case_mixed_gamma1_sp(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    const int N = 2, cutoff = 8;
    EnsembleSpec sp;
    sp.kind = EnsembleSpec::Kind::haar_symplectic;
    sp.k = N / 2;
    Specialization p = random_explicit_spec(opt.seed ^ 0x5151, cutoff);
    for (int l : {1, 2}) {
        auto t0 = Clock::now();
        ModelConfig cfg = gamma1_mixed(sp, l, p, N, cutoff);
        auto lhs = model_series_terms(cfg);
        ContentFactor r;
        r.scalar = Rat(1, N);
        r.num_shifts = {Rat(l)};
        auto rhs = hyp_tau_terms(HypKind::dkp, r, Specialization::scaled(Rat(N), p), N, cutoff);
        Rat residual = 0;
        std::map<Partition, Rat> diff;
        for (const auto& [lam, t] : lhs) diff[lam] += t;
        for (const auto& [lam, t] : rhs) diff[lam] -= t;
        for (const auto& [lam, d] : diff) residual = std::max(residual, abs_rat(d));
        out.push_back(exact_report(
            "mixed-gamma1-sp",
            {{"N", std::to_string(N)}, {"l", std::to_string(l)}, {"cutoff", std::to_string(cutoff)}},
            residual, "term-by-term == hypergeometric DKP series (exact)", opt.seed, t0));
    }
    return out;
}

std::vector<VerificationReport> case_mixed_gamma1_qgin(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    const int Nq = 2, N = 4, cutoff = 8, l = 3;
    Specialization p = random_explicit_spec(opt.seed ^ 0x9292, cutoff);
    for (long L : {0L, 1L}) {
        auto t0 = Clock::now();
        EnsembleSpec qg;
        qg.kind = EnsembleSpec::Kind::quaternion_ginibre;
        qg.N = Nq;
        qg.L = L;
        ModelConfig cfg = gamma1_mixed(qg, l, p, N, cutoff);
        auto lhs = model_series_terms(cfg);
        ContentFactor r;
        r.scalar = Rat(1, static_cast<long>(N) * Nq);
        r.num_shifts = {Rat(Nq + L), Rat(l)};
        auto rhs = hyp_tau_terms(HypKind::dkp, r, Specialization::scaled(Rat(N), p), N, cutoff);
        Rat residual = 0;
        std::map<Partition, Rat> diff;
        for (const auto& [lam, t] : lhs) diff[lam] += t;
        for (const auto& [lam, t] : rhs) diff[lam] -= t;
        for (const auto& [lam, d] : diff) residual = std::max(residual, abs_rat(d));
        out.push_back(exact_report("mixed-gamma1-qgin",
                                   {{"N_quaternion", std::to_string(Nq)},
                                    {"L", std::to_string(L)},
                                    {"l", std::to_string(l)},
                                    {"cutoff", std::to_string(cutoff)}},
                                   residual, "term-by-term == hypergeometric DKP series (exact)",
                                   opt.seed, t0));
    }
    return out;
}

std::vector<VerificationReport> case_mixed_gamma1_orth(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    const int cutoff = 8, l = 2;
    Specialization p = random_explicit_spec(opt.seed ^ 0x3434, cutoff);
    for (int N : {2, 3}) {
        auto t0 = Clock::now();
        EnsembleSpec orth;
        orth.kind = EnsembleSpec::Kind::haar_orthogonal;
        orth.N = N;
        ModelConfig cfg = gamma1_mixed(orth, l, p, N, cutoff);
        auto lhs = model_series_terms(cfg);
        // negated-argument fat form: sum over fat nu with nu_1 <= N of
        // N^{-|nu|} (-l)_nu s_nu(-N p)
        PowerSums<Rat> neg = Specialization::scaled(Rat(-N), p).power_sums<Rat>(cutoff);
        PartitionConstraints pc;
        pc.weight_min = 0;
        pc.weight_max = cutoff;
        pc.max_part = N;
        pc.filter = PartitionConstraints::Filter::fat;
        std::map<Partition, Rat> rhs;  // keyed by the even-part partition nu^t
        for (const Partition& nu : enumerate_partitions(pc)) {
            PowerSums<Rat> cut;
            cut.values.assign(neg.values.begin(), neg.values.begin() + nu.weight());
            Rat t = schur_from_power_sums(nu, cut);
            if (t == 0) continue;
            t *= content_pochhammer(Rat(-l), nu) * rat_pow(Rat(1, N), nu.weight());
            rhs[nu.conjugate()] += t;
        }
        Rat residual = 0;
        std::map<Partition, Rat> diff = rhs;
        for (const auto& [lam, t] : lhs) diff[lam] -= t;
        for (const auto& [lam, d] : diff) residual = std::max(residual, abs_rat(d));
        out.push_back(exact_report("mixed-gamma1-orth",
                                   {{"N", std::to_string(N)},
                                    {"l", std::to_string(l)},
                                    {"cutoff", std::to_string(cutoff)}},
                                   residual, "even-part series == negated fat series (exact)",
                                   opt.seed, t0));
    }
    return out;
}

std::vector<VerificationReport> case_borodin(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    const int cutoff = 8;
    Specialization p = random_explicit_spec(opt.seed ^ 0x7777, cutoff);
    for (int k : {1, 2}) {
        auto t0 = Clock::now();
        const int N = 2 * k;
        EnsembleSpec sp;
        sp.kind = EnsembleSpec::Kind::haar_symplectic;
        sp.k = k;
        ModelConfig cfg = gamma2_mixed(sp, p, Specialization::pinf(), N, cutoff);
        auto lhs = model_series_terms(cfg);  // keyed by fat lambda
        auto rhs = dse_terms(DseKind::borodin, Specialization::scaled(Rat(N), p), k, cutoff);
        std::map<Partition, Rat> diff;
        for (const auto& [lam, t] : lhs) diff[lam] += t;
        for (const auto& [mu, t] : rhs) diff[fatten(mu)] -= t;
        Rat residual = 0;
        for (const auto& [lam, d] : diff) residual = std::max(residual, abs_rat(d));
        out.push_back(exact_report(
            "borodin", {{"k", std::to_string(k)}, {"cutoff", std::to_string(cutoff)}}, residual,
            "gamma2 mixed series == discrete-ensemble partition function (exact)", opt.seed, t0));
    }
    return out;
}

std::vector<VerificationReport> case_gamma3_sp(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    const int N = 2, cutoff = 8, l1 = 1, l2 = 2;
    EnsembleSpec sp;
    sp.kind = EnsembleSpec::Kind::haar_symplectic;
    sp.k = N / 2;
    Specialization p = random_explicit_spec(opt.seed ^ 0x1357, cutoff);
    ModelConfig cfg = gamma3_mixed(l1, l2, sp, p, N, cutoff);
    auto lhs = model_series_terms(cfg);
    ContentFactor r;
    r.scalar = Rat(1, static_cast<long>(N) * N);
    r.num_shifts = {Rat(l1), Rat(l2)};
    auto rhs = hyp_tau_terms(HypKind::dkp, r, Specialization::scaled(Rat(N), p), N, cutoff);
    std::map<Partition, Rat> diff;
    for (const auto& [lam, t] : lhs) diff[lam] += t;
    for (const auto& [lam, t] : rhs) diff[lam] -= t;
    Rat residual = 0;
    for (const auto& [lam, d] : diff) residual = std::max(residual, abs_rat(d));
    return {exact_report("gamma3-sp",
                         {{"N", std::to_string(N)},
                          {"l1", std::to_string(l1)},
                          {"l2", std::to_string(l2)},
                          {"cutoff", std::to_string(cutoff)}},
                         residual, "term-by-term == hypergeometric DKP series (exact)", opt.seed,
                         t0)};
}

std::vector<VerificationReport> case_star(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    const int N = 2, cutoff = 8, p_exp = 2;
    EnsembleSpec sp;
    sp.kind = EnsembleSpec::Kind::haar_symplectic;
    sp.k = N / 2;
    Specialization p = random_explicit_spec(opt.seed ^ 0x2468, cutoff);
    ModelConfig cfg = gamma3_star(sp, p, N, cutoff);
    auto lhs = model_series_terms(cfg);
    auto rhs = dse_terms(DseKind::star, p, N, cutoff, p_exp);
    std::map<Partition, Rat> diff;
    for (const auto& [lam, t] : lhs) diff[lam] += t;
    for (const auto& [mu, t] : rhs) diff[fatten(mu)] -= t;
    Rat residual = 0;
    for (const auto& [lam, d] : diff) residual = std::max(residual, abs_rat(d));
    VerificationReport eq = exact_report(
        "star", {{"N", std::to_string(N)}, {"p_exp", std::to_string(p_exp)}}, residual,
        "all-averaged gamma3 series == star discrete-ensemble series (exact)", opt.seed, t0);
    Solvability sol = classify_solvability(cfg);
    VerificationReport cls;
    cls.case_name = "star";
    cls.parameters = {{"check", "classifier"},
                      {"exactly_solvable", sol.exactly_solvable ? "true" : "false"}};
    cls.pass = sol.solvable && !sol.exactly_solvable;
    cls.criterion = "solvable but not exactly solvable";
    cls.seed = opt.seed;
    cls.runtime_ms = ms_since(t0);
    return {eq, cls};
}

std::vector<VerificationReport> case_chain(const VerifyOptions& opt) {
    long S = pick_samples(opt, 200000, 50000);
    const int N = opt.N.value_or(2), l = opt.l.value_or(1), cutoff = 8;
    const Rat a = opt.a.value_or(Rat(1, 2));
    const Rat x = opt.x.value_or(Rat(3, 10));
    Specialization miwa_p = Specialization::miwa_vars(-1, {x});

    int det_face = 0;
    ModelConfig cfg1 = chain_config(1, miwa_p, a, l, N, cutoff, &det_face);
    SeriesValue tau = mixed_series(cfg1);

    std::vector<VerificationReport> out;
    struct Run {
        int which;
        MCEstimate mc;
    };
    std::vector<Run> runs;
    for (int which : {1, 5, 8}) {
        auto t0 = Clock::now();
        int dface = 0;
        ModelConfig cfg = chain_config(which, miwa_p, a, l, N, cutoff, &dface);
        IntegrandSpec integrand;
        integrand.det_faces[dface] = a;
        uint64_t seed = subseed(opt.seed, 900 + static_cast<uint64_t>(which));
        McStats stats;
        MCEstimate mc = mc_partition_function(cfg, integrand, S, seed, &stats, opt.threads);
        runs.push_back({which, mc});
        VerificationReport r;
        r.case_name = "chain-equalities";
        r.parameters = {{"config", std::to_string(which)},
                        {"N", std::to_string(N)},
                        {"l", std::to_string(l)},
                        {"a", format_rational(a)},
                        {"x", format_rational(x)},
                        {"rejected", std::to_string(stats.rejected)}};
        r.exact_value = tau.value;
        r.mc = mc;
        r.pass = std::abs(mc.mean - tau.as_double()) <= std::max(4.0 * mc.stderr_, 1e-9);
        r.criterion = "|mc - exact DKP series| <= 4*stderr";
        r.seed = seed;
        r.runtime_ms = ms_since(t0);
        out.push_back(std::move(r));
    }
    for (size_t i = 0; i < runs.size(); ++i)
        for (size_t j = i + 1; j < runs.size(); ++j) {
            VerificationReport r;
            r.case_name = "chain-equalities";
            r.parameters = {{"pair", std::to_string(runs[i].which) + "&" +
                                         std::to_string(runs[j].which)},
                            {"mean_i", dstr(runs[i].mc.mean)},
                            {"mean_j", dstr(runs[j].mc.mean)}};
            double se = std::sqrt(runs[i].mc.stderr_ * runs[i].mc.stderr_ +
                                  runs[j].mc.stderr_ * runs[j].mc.stderr_);
            r.pass = std::abs(runs[i].mc.mean - runs[j].mc.mean) <= std::max(4.0 * se, 1e-9);
            r.criterion = "|mc_i - mc_j| <= 4*sqrt(se_i^2+se_j^2)";
            r.seed = opt.seed;
            out.push_back(std::move(r));
        }
    return out;
}

std::vector<VerificationReport> case_orthmm_duality(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    const int W = 10;
    PowerSums<Rat> p = random_power_sums(opt.seed ^ 0xaaaa, W);
    PowerSums<Rat> mp = p;
    for (auto& v : mp.values) v = -v;
    for (int bound : {2, 3, 10}) {
        auto t0 = Clock::now();
        Rat residual = 0;
        for (int w = 0; w <= W; ++w) {
            PartitionConstraints even;
            even.weight_min = even.weight_max = w;
            even.filter = PartitionConstraints::Filter::even_parts;
            even.max_length = bound;
            Rat lhs = 0;
            for (const Partition& lam : enumerate_partitions(even)) {
                PowerSums<Rat> cut;
                cut.values.assign(p.values.begin(), p.values.begin() + w);
                lhs += schur_from_power_sums(lam, cut);
            }
            PartitionConstraints fat;
            fat.weight_min = fat.weight_max = w;
            fat.filter = PartitionConstraints::Filter::fat;
            fat.max_part = bound;
            Rat rhs = 0;
            for (const Partition& nu : enumerate_partitions(fat)) {
                PowerSums<Rat> cut;
                cut.values.assign(mp.values.begin(), mp.values.begin() + w);
                rhs += schur_from_power_sums(nu, cut);
            }
            residual = std::max(residual, abs_rat(lhs - rhs));
        }
        out.push_back(exact_report("orthmm-duality",
                                   {{"bound", std::to_string(bound)}, {"max_weight", "10"}},
                                   residual,
                                   "per-weight even-part series == negated fat series (exact)",
                                   opt.seed, t0));
    }
    return out;
}

std::vector<VerificationReport> case_dse_weight(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    Rat residual = 0;
    for (int N = 1; N <= 4; ++N) {
        PartitionConstraints pc;
        pc.weight_min = 0;
        pc.weight_max = 8;
        pc.max_length = N;
        for (const Partition& lam : enumerate_partitions(pc))
            residual = std::max(residual,
                                abs_rat(dse_weight(lam, N) - schur_at_pinfty(fatten(lam))));
    }
    if (dse_weight(Partition::parse("1"), 2) != Rat(1, 2)) residual = std::max(residual, Rat(1));
    if (dse_weight(Partition::parse("2,1"), 2) != Rat(1, 80)) residual = std::max(residual, Rat(1));
    return {exact_report("dse-weight", {{"range", "l(lambda)<=N<=4, |lambda|<=8"}}, residual,
                         "dse_weight(lambda,N) == s_{lambda∪lambda}(p_inf) (exact, incl. pinned "
                         "1/2 and 1/80)",
                         opt.seed, t0)};
}

std::vector<VerificationReport> case_cl_identity(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    for (int n : {2, 3}) {
        auto t0 = Clock::now();
        RatMat X = random_rational_matrix(opt.seed ^ (0xc100 + static_cast<uint64_t>(n)), n);
        PowerSums<Rat> p = random_power_sums(opt.seed ^ 0xc1f0, 6);
        Rat residual = cauchy_littlewood_check(X, p, 6);
        out.push_back(exact_report("cl-identity",
                                   {{"matrix_order", std::to_string(n)}, {"degree", "6"}},
                                   residual, "per-degree residual == 0 (exact)", opt.seed, t0));
    }
    return out;
}

using CaseFn = std::vector<VerificationReport> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CaseFn>>& case_table() {
    static const std::vector<std::pair<std::string, CaseFn>> table = {
        {"schur-mean-sp", case_schur_mean_sp},
        {"schur-mean-orth", case_schur_mean_orth},
        {"schur-mean-qgin", case_schur_mean_qgin},
        {"eq-I-gamma1", case_eq_I_gamma1},
        {"eq-I-gamma2", case_eq_I_gamma2},
        {"zu-mm-gamma1", case_zu_mm_gamma1},
        {"mixed-gamma1-sp", case_mixed_gamma1_sp},
        {"mixed-gamma1-qgin", case_mixed_gamma1_qgin},
        {"mixed-gamma1-orth", case_mixed_gamma1_orth},
        {"borodin", case_borodin},
        {"gamma3-sp", case_gamma3_sp},
        {"star", case_star},
        {"chain-equalities", case_chain},
        {"orthmm-duality", case_orthmm_duality},
        {"dse-weight", case_dse_weight},
        {"cl-identity", case_cl_identity},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_case_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : case_table()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<VerificationReport> run_verify_case(const std::string& name, const VerifyOptions& opt) {
    for (const auto& [n, fn] : case_table())
        if (n == name) return fn(opt);
    throw std::invalid_argument("unknown verify case '" + name + "'");
}

std::vector<VerificationReport> run_verify_all(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    for (const auto& [name, fn] : case_table()) {
        auto part = fn(opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace fatpart
