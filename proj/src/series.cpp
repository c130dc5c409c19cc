#include "fatpart/series.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

namespace fatpart {

namespace {

struct PreparedModel {
    int n = 0, F = 0, V = 0;
    std::vector<int> averaged;                      // vertex indices, ascending
    std::vector<int> placeholder_corner;            // parallel to `averaged`
    std::map<int, RatMat> constant_monodromy;       // non-averaged vertex -> product
    bool need_fat = false;
    bool need_even = false;
};

PreparedModel prepare_model(const ModelConfig& cfg) {
    GraphValidation gv = validate_graph(cfg.graph);
    if (!gv.ok) {
        std::string msg = "invalid graph:";
        for (const auto& v : gv.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    if (static_cast<int>(cfg.face_specs.size()) != cfg.graph.face_count())
        throw std::invalid_argument("need one face spec per face");
    if (cfg.assignment.N != cfg.N)
        throw std::invalid_argument("corner assignment order differs from config N");
    if (cfg.cutoff < 0 || cfg.cutoff > kDegreeCap)
        throw std::invalid_argument("cutoff outside [0, " + std::to_string(kDegreeCap) + "]");
    cfg.assignment.require_complete(cfg.graph.n);

    PreparedModel pm;
    pm.n = cfg.graph.n;
    pm.F = cfg.graph.face_count();
    pm.V = cfg.graph.vertex_count();
    for (int v = 0; v < pm.V; ++v) {
        const auto& cyc = cfg.graph.vertices[static_cast<size_t>(v)];
        auto avg = cfg.averaged_vertices.find(v);
        int placeholder = 0, placeholder_count = 0;
        for (int lab : cyc) {
            if (cfg.assignment.at(lab).is_placeholder()) {
                placeholder = lab;
                ++placeholder_count;
            }
        }
        if (avg == cfg.averaged_vertices.end()) {
            if (placeholder_count != 0)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " has a placeholder corner but is not averaged");
            pm.constant_monodromy.emplace(v, exact_vertex_monodromy(cfg.graph, cfg.assignment, v));
            continue;
        }
        const EnsembleSpec& e = avg->second;
        if (placeholder_count != 1)
            throw std::invalid_argument("averaged vertex " + std::to_string(v) +
                                        " must carry exactly one ensemble placeholder corner");
        for (int lab : cyc)
            if (lab != placeholder && cfg.assignment.at(lab).type != CornerSpec::Type::identity)
                throw std::invalid_argument("averaged vertex " + std::to_string(v) +
                                            " may combine its placeholder only with identity corners");
        const auto& ph = cfg.assignment.at(placeholder);
        if (ph.ensemble && !(*ph.ensemble == e))
            throw std::invalid_argument("placeholder ensemble disagrees with averaged_vertices");
        if (e.matrix_order() != cfg.N)
            throw std::invalid_argument("ensemble " + e.to_string() + " is not of matrix order " +
                                        std::to_string(cfg.N));
        pm.averaged.push_back(v);
        pm.placeholder_corner.push_back(placeholder);
        switch (e.kind) {
            case EnsembleSpec::Kind::haar_symplectic:
            case EnsembleSpec::Kind::quaternion_ginibre:
                pm.need_fat = true;
                break;
            case EnsembleSpec::Kind::haar_orthogonal:
                pm.need_even = true;
                break;
            case EnsembleSpec::Kind::complex_ginibre:
                throw std::invalid_argument(
                    "a complex Ginibre vertex average has no closed form; "
                    "it belongs to the graph integral itself");
        }
    }
    return pm;
}

std::optional<long> combined_width_bound(const ModelConfig& cfg) {
    std::optional<long> w;
    for (const auto& spec : cfg.face_specs) {
        auto b = Specialization::scaled(Rat(cfg.N), spec).width_bound();
        if (b && (!w || *b < *w)) w = b;
    }
    return w;
}

long combined_length_bound(const ModelConfig& cfg, const PreparedModel& pm) {
    long bound = cfg.N;
    for (const auto& spec : cfg.face_specs) {
        auto b = Specialization::scaled(Rat(cfg.N), spec).length_bound();
        if (b && *b < bound) bound = *b;
    }
    for (const auto& [v, mono] : pm.constant_monodromy) {
        // an idempotent monodromy of rank r kills lengths beyond r
        if (mono.is_idempotent()) {
            Rat r = mono.trace();
            if (denominator(r) == 1) {
                long rank = numerator(r).convert_to<long>();
                if (rank < bound) bound = rank;
            }
        }
    }
    return bound;
}

}  // namespace

std::vector<std::pair<Partition, Rat>> model_series_terms(const ModelConfig& cfg) {
    PreparedModel pm = prepare_model(cfg);

    std::vector<PowerSums<Rat>> face_ps;
    face_ps.reserve(static_cast<size_t>(pm.F));
    for (const auto& spec : cfg.face_specs)
        face_ps.push_back(Specialization::scaled(Rat(cfg.N), spec).power_sums<Rat>(cfg.cutoff));

    std::map<int, std::vector<Rat>> vertex_ps;
    for (const auto& [v, mono] : pm.constant_monodromy)
        vertex_ps.emplace(v, mono.power_sums(cfg.cutoff));

    // cache of s_lambda(spec) per (spec string, lambda), per evaluation
    std::map<std::pair<std::string, Partition>, Rat> face_cache;
    std::vector<std::string> face_keys;
    for (const auto& spec : cfg.face_specs)
        face_keys.push_back(Specialization::scaled(Rat(cfg.N), spec).to_string());

    PartitionConstraints pc;
    pc.weight_min = 0;
    pc.weight_max = cfg.cutoff;
    pc.max_length = static_cast<int>(combined_length_bound(cfg, pm));
    if (auto w = combined_width_bound(cfg)) pc.max_part = static_cast<int>(*w);
    if (pm.need_fat && pm.need_even)
        pc.filter = PartitionConstraints::Filter::all;  // filtered below
    else if (pm.need_fat)
        pc.filter = PartitionConstraints::Filter::fat;
    else if (pm.need_even)
        pc.filter = PartitionConstraints::Filter::even_parts;

    std::vector<std::pair<Partition, Rat>> out;
    for (const Partition& lam : enumerate_partitions(pc, std::max(cfg.cutoff, kEnumerationWeightCap))) {
        if (pm.need_fat && pm.need_even) {
            PartitionClass cls = classify(lam);
            if (!cls.is_fat || !cls.is_even_parts) continue;
        }
        Rat term = rat_pow(rat_pow(Rat(cfg.N), lam.weight()) * schur_at_pinfty(lam), -pm.n);
        for (int f = 0; f < pm.F && term != 0; ++f) {
            auto key = std::make_pair(face_keys[static_cast<size_t>(f)], lam);
            auto it = face_cache.find(key);
            if (it == face_cache.end())
                it = face_cache.emplace(key, schur_from_power_sums(lam, face_ps[static_cast<size_t>(f)])).first;
            term *= it->second;
        }
        for (size_t ai = 0; ai < pm.averaged.size() && term != 0; ++ai)
            term *= closed_form_schur_average(cfg.averaged_vertices.at(pm.averaged[ai]), lam);
        for (const auto& [v, ps] : vertex_ps) {
            if (term == 0) break;
            PowerSums<Rat> vps;
            vps.values.assign(ps.begin(), ps.begin() + lam.weight());
            term *= schur_from_power_sums(lam, vps);
        }
        if (term != 0) out.emplace_back(lam, std::move(term));
    }
    return out;
}

namespace {

SeriesValue sum_terms(const std::vector<std::pair<Partition, Rat>>& terms, const ModelConfig& cfg) {
    PreparedModel pm = prepare_model(cfg);
    SeriesValue sv;
    sv.max_weight = cfg.cutoff;
    for (const auto& [lam, t] : terms) {
        sv.value += t;
        ++sv.term_count;
    }
    auto wb = combined_width_bound(cfg);
    if (wb) {
        long lb = combined_length_bound(cfg, pm);
        sv.truncated_exactly = static_cast<long>(cfg.cutoff) >= lb * *wb;
    }
    return sv;
}

}  // namespace

SeriesValue zu_mm_series(const ModelConfig& cfg) {
    if (!cfg.averaged_vertices.empty())
        throw std::invalid_argument("zu_mm_series takes a config without averaged vertices");
    return sum_terms(model_series_terms(cfg), cfg);
}

SeriesValue mixed_series(const ModelConfig& cfg) {
    if (cfg.averaged_vertices.empty())
        throw std::invalid_argument("mixed_series needs at least one averaged vertex");
    return sum_terms(model_series_terms(cfg), cfg);
}

ContentFactor ContentFactor::parse(const std::string& s) {
    ContentFactor r;
    if (s == "1" || s.empty()) return r;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.rfind("s=", 0) == 0)
            r.scalar *= parse_rational(tok.substr(2));
        else if (tok.rfind("p=", 0) == 0)
            r.num_shifts.push_back(parse_rational(tok.substr(2)));
        else if (tok.rfind("d=", 0) == 0)
            r.den_shifts.push_back(parse_rational(tok.substr(2)));
        else
            throw std::invalid_argument("bad content factor token '" + tok + "'");
    }
    return r;
}

std::string ContentFactor::to_string() const {
    std::string out = "s=" + format_rational(scalar);
    for (const auto& a : num_shifts) out += ",p=" + format_rational(a);
    for (const auto& b : den_shifts) out += ",d=" + format_rational(b);
    return out;
}

Rat ContentFactor::over_cells(const Partition& lam) const {
    Rat out = rat_pow(scalar, lam.weight());
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            Rat c(j - i);
            for (const auto& a : num_shifts) out *= a + c;
            for (const auto& b : den_shifts) {
                if (b + c == 0)
                    throw std::domain_error("content factor pole at cell (" + std::to_string(i) +
                                            "," + std::to_string(j) + ") of " + lam.to_string() +
                                            " (content " + std::to_string(j - i) + ")");
                out /= b + c;
            }
        }
    return out;
}

std::vector<std::pair<Partition, Rat>> hyp_tau_terms(HypKind kind, const ContentFactor& r,
                                                     const Specialization& p, int N, int cutoff,
                                                     const std::vector<Specialization>& extra) {
    if (cutoff < 0 || cutoff > kDegreeCap) throw std::invalid_argument("cutoff out of range");
    PartitionConstraints pc;
    pc.weight_min = 0;
    pc.weight_max = cutoff;
    pc.max_length = N;
    if (kind == HypKind::dkp) pc.filter = PartitionConstraints::Filter::fat;
    auto plb = p.length_bound();
    if (plb && *plb < N) pc.max_length = static_cast<int>(*plb);
    if (auto w = p.width_bound()) pc.max_part = static_cast<int>(*w);

    PowerSums<Rat> ps = p.power_sums<Rat>(cutoff);
    std::vector<PowerSums<Rat>> extra_ps;
    for (const auto& e : extra) extra_ps.push_back(e.power_sums<Rat>(cutoff));

    std::vector<std::pair<Partition, Rat>> out;
    for (const Partition& lam : enumerate_partitions(pc, std::max(cutoff, kEnumerationWeightCap))) {
        PowerSums<Rat> cut;
        cut.values.assign(ps.values.begin(), ps.values.begin() + lam.weight());
        Rat term = schur_from_power_sums(lam, cut);
        if (term == 0) continue;
        term *= r.over_cells(lam);
        for (const auto& eps : extra_ps) {
            if (term == 0) break;
            PowerSums<Rat> ecut;
            ecut.values.assign(eps.values.begin(), eps.values.begin() + lam.weight());
            term *= schur_from_power_sums(lam, ecut);
        }
        if (term != 0) out.emplace_back(lam, std::move(term));
    }
    return out;
}

SeriesValue hyp_tau_series(HypKind kind, const ContentFactor& r, const Specialization& p, int N,
                           int cutoff, const std::vector<Specialization>& extra) {
    SeriesValue sv;
    sv.max_weight = cutoff;
    for (const auto& [lam, t] : hyp_tau_terms(kind, r, p, N, cutoff, extra)) {
        sv.value += t;
        ++sv.term_count;
    }
    auto wb = p.width_bound();
    if (wb) {
        long lb = N;
        if (auto b = p.length_bound()) lb = std::min<long>(lb, *b);
        sv.truncated_exactly = static_cast<long>(cutoff) >= lb * *wb;
    }
    return sv;
}

Solvability classify_solvability(const ModelConfig& cfg, bool permissive) {
    Solvability out;
    GraphValidation gv = validate_graph(cfg.graph);
    if (!gv.ok) {
        out.reasons.insert(out.reasons.end(), gv.violations.begin(), gv.violations.end());
        out.exactly_solvable = false;
        return out;
    }
    if (gv.genus != 0)
        out.reasons.push_back("graph has genus " + std::to_string(gv.genus) +
                              "; the sphere (F - n + V = 2) is required");
    int general_faces = 0;
    for (size_t f = 0; f < cfg.face_specs.size(); ++f) {
        const auto& s = cfg.face_specs[f];
        if (s.base != Specialization::Base::p_infinity && s.base != Specialization::Base::p_of_a)
            ++general_faces;
    }
    if (general_faces > 1)
        out.reasons.push_back(std::to_string(general_faces) +
                              " faces keep general coupling sets; at most one may");
    for (int v = 0; v < cfg.graph.vertex_count(); ++v) {
        if (cfg.averaged_vertices.count(v)) continue;
        bool exact = true;
        for (int lab : cfg.graph.vertices[static_cast<size_t>(v)])
            if (!cfg.assignment.at(lab).is_exact_real()) exact = false;
        if (!exact) {
            out.reasons.push_back("vertex " + std::to_string(v) +
                                  " monodromy is not a rank projector");
            continue;
        }
        RatMat mono = exact_vertex_monodromy(cfg.graph, cfg.assignment, v);
        if (!mono.is_idempotent())
            out.reasons.push_back("vertex " + std::to_string(v) +
                                  " monodromy is not a J_l projector or the identity");
    }
    int v = static_cast<int>(cfg.averaged_vertices.size());
    if (v > 1) {
        if (permissive)
            out.reasons.push_back("warning: " + std::to_string(v) +
                                  " averaged vertices; the tau-function statement assumes one");
        else
            out.reasons.push_back(std::to_string(v) +
                                  " averaged vertices; at most one is allowed");
    }
    out.exactly_solvable = true;
    for (const auto& r : out.reasons)
        if (r.rfind("warning:", 0) != 0) out.exactly_solvable = false;
    return out;
}

namespace {

struct FacePlan {
    enum class Kind { exp_trace_pinf, exp_trace_miwa, det_power };
    Kind kind;
    double pinf_scale = 1.0;            // p_inf: exp(N * scale * tr F)
    std::vector<double> miwa_vars;      // Miwa: prod_j det(1 - x_j F)^{-sign N scale}
    double miwa_exponent = 0.0;         // -sign * N * scale
    double det_exponent = 0.0;          // -N a
};

}  // namespace

MCEstimate mc_partition_function(const ModelConfig& cfg, const IntegrandSpec& integrand, long S,
                                 uint64_t seed, McStats* stats, int threads) {
    PreparedModel pm = prepare_model(cfg);
    const int N = cfg.N;

    std::vector<FacePlan> plans;
    for (int f = 0; f < pm.F; ++f) {
        const Specialization& spec = cfg.face_specs[static_cast<size_t>(f)];
        FacePlan plan{};
        auto det_it = integrand.det_faces.find(f);
        if (det_it != integrand.det_faces.end()) {
            Rat a = det_it->second;
            if (spec.base != Specialization::Base::p_of_a || spec.a * spec.scale != a)
                throw std::invalid_argument(
                    "det_powers face " + std::to_string(f) +
                    " must carry the matching p(a) spec");
            plan.kind = FacePlan::Kind::det_power;
            plan.det_exponent = -static_cast<double>(N) * to_double(a);
        } else if (spec.base == Specialization::Base::p_infinity) {
            plan.kind = FacePlan::Kind::exp_trace_pinf;
            plan.pinf_scale = to_double(spec.scale);
        } else if (spec.base == Specialization::Base::miwa) {
            plan.kind = FacePlan::Kind::exp_trace_miwa;
            for (const auto& x : spec.values) plan.miwa_vars.push_back(to_double(x));
            plan.miwa_exponent = -spec.miwa_sign * static_cast<double>(N) * to_double(spec.scale);
        } else {
            throw std::invalid_argument(
                "face " + std::to_string(f) +
                ": exp-trace faces need a p_inf or Miwa spec; p(a) faces go through det_powers");
        }
        plans.push_back(plan);
    }

    std::vector<double> vals(static_cast<size_t>(S));
    std::vector<uint8_t> rejected(static_cast<size_t>(S), 0);
    std::vector<uint8_t> radius_flag(static_cast<size_t>(S), 0);

    auto fn = [&](long i) -> double {
        RngStream rng = RngStream::keyed(seed, static_cast<uint64_t>(i));
        std::map<int, Eigen::MatrixXcd> Z;
        for (int e = 1; e <= pm.n; ++e) Z.emplace(e, sample_complex_ginibre(N, rng));
        std::map<int, Eigen::MatrixXcd> overrides;
        for (size_t ai = 0; ai < pm.averaged.size(); ++ai) {
            const EnsembleSpec& es = cfg.averaged_vertices.at(pm.averaged[ai]);
            Eigen::MatrixXcd M;
            switch (es.kind) {
                case EnsembleSpec::Kind::haar_symplectic:
                    M = sample_haar_symplectic_matrix(es.k, rng);
                    break;
                case EnsembleSpec::Kind::haar_orthogonal:
                    M = sample_haar_orthogonal(es.N, rng).cast<cplx>();
                    break;
                case EnsembleSpec::Kind::quaternion_ginibre:
                    M = sample_quaternion_ginibre(es.N, rng);
                    break;
                case EnsembleSpec::Kind::complex_ginibre:
                    M = sample_complex_ginibre(es.N, rng);
                    break;
            }
            overrides.emplace(pm.placeholder_corner[ai], std::move(M));
        }
        Monodromies mono = monodromies(cfg.graph, cfg.assignment, &Z, &overrides);
        cplx total(1.0, 0.0);
        for (int f = 0; f < pm.F; ++f) {
            const FacePlan& plan = plans[static_cast<size_t>(f)];
            const Eigen::MatrixXcd& F = mono.dressed_face[static_cast<size_t>(f)];
            if (plan.kind == FacePlan::Kind::exp_trace_pinf) {
                total *= std::exp(static_cast<double>(N) * plan.pinf_scale * F.trace());
                continue;
            }
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(F, false);
            const auto& zs = es.eigenvalues();
            if (plan.kind == FacePlan::Kind::det_power) {
                cplx logdet(0.0, 0.0);
                for (int t = 0; t < zs.size(); ++t) {
                    cplx w = cplx(1.0, 0.0) - zs(t);
                    if (std::abs(w) < 1e-8) {
                        rejected[static_cast<size_t>(i)] = 1;
                        return 0.0;
                    }
                    logdet += std::log(w);
                }
                total *= std::exp(plan.det_exponent * logdet);
            } else {
                cplx acc(0.0, 0.0);
                for (double x : plan.miwa_vars)
                    for (int t = 0; t < zs.size(); ++t) {
                        cplx w = cplx(1.0, 0.0) - x * zs(t);
                        if (std::abs(x * zs(t)) >= 1.0) radius_flag[static_cast<size_t>(i)] = 1;
                        if (std::abs(w) < 1e-8) {
                            rejected[static_cast<size_t>(i)] = 1;
                            return 0.0;
                        }
                        acc += std::log(w);
                    }
                total *= std::exp(plan.miwa_exponent * acc);
            }
        }
        if (!std::isfinite(total.real()) || !std::isfinite(total.imag())) {
            rejected[static_cast<size_t>(i)] = 1;
            return 0.0;
        }
        return total.real();
    };

    // fill, then reduce over accepted samples in fixed order
    parallel_for_samples(S, [&](long i) { vals[static_cast<size_t>(i)] = fn(i); }, threads);
    std::vector<double> accepted;
    accepted.reserve(static_cast<size_t>(S));
    long nrej = 0, nrad = 0;
    for (long i = 0; i < S; ++i) {
        if (rejected[static_cast<size_t>(i)]) {
            ++nrej;
            continue;
        }
        accepted.push_back(vals[static_cast<size_t>(i)]);
        if (radius_flag[static_cast<size_t>(i)]) ++nrad;
    }
    if (stats) {
        stats->rejected = nrej;
        stats->radius_warnings = nrad;
    }
    if (nrej > S / 100)
        throw std::runtime_error("mc_partition_function: " + std::to_string(nrej) +
                                 " rejected samples exceed 1% of S; estimate invalid");
    if (accepted.empty()) throw std::runtime_error("mc_partition_function: no accepted samples");
    double mean = pairwise_sum(accepted) / static_cast<double>(accepted.size());
    std::vector<double> sq(accepted.size());
    for (size_t t = 0; t < accepted.size(); ++t) {
        double d = accepted[t] - mean;
        sq[t] = d * d;
    }
    double var = accepted.size() > 1
                     ? pairwise_sum(sq) / static_cast<double>(accepted.size() - 1)
                     : 0.0;
    MCEstimate est;
    est.mean = mean;
    est.stderr_ = std::sqrt(var / static_cast<double>(accepted.size()));
    est.samples = static_cast<long>(accepted.size());
    est.seed = seed;
    return est;
}

RelationCheck schur_average_relation_check(const RibbonGraph& g, const CornerAssignment& a,
                                           const std::vector<Partition>& face_lambdas, long S,
                                           uint64_t seed, int threads) {
    GraphValidation gv = validate_graph(g);
    if (!gv.ok) throw std::invalid_argument("invalid graph");
    if (static_cast<int>(face_lambdas.size()) != g.face_count())
        throw std::invalid_argument("need one partition per face");
    a.require_complete(g.n);
    const int N = a.N;

    bool all_equal = true;
    for (const auto& lam : face_lambdas)
        if (!(lam == face_lambdas[0])) all_equal = false;

    RelationCheck out;
    if (all_equal) {
        const Partition& lam = face_lambdas[0];
        Rat rhs = rat_pow(rat_pow(Rat(N), lam.weight()) * schur_at_pinfty(lam),
                          -static_cast<long>(g.n));
        for (int v = 0; v < g.vertex_count(); ++v)
            rhs *= schur_of_matrix(lam, exact_vertex_monodromy(g, a, v));
        out.rhs = rhs;
    } else {
        out.rhs = 0;
    }

    auto fn = [&](long i) -> double {
        RngStream rng = RngStream::keyed(seed, static_cast<uint64_t>(i));
        std::map<int, Eigen::MatrixXcd> Z;
        for (int e = 1; e <= g.n; ++e) Z.emplace(e, sample_complex_ginibre(N, rng));
        Monodromies mono = monodromies(g, a, &Z);
        cplx prod(1.0, 0.0);
        for (int f = 0; f < g.face_count(); ++f)
            prod *= schur_of_matrix(face_lambdas[static_cast<size_t>(f)],
                                    mono.dressed_face[static_cast<size_t>(f)]);
        return prod.real();
    };
    McResult res = mc_run(S, fn, threads);
    out.mc = MCEstimate{res.mean, res.stderr_, res.samples, seed};
    double diff = std::abs(out.mc.mean - to_double(out.rhs));
    out.pass = diff <= std::max(4.0 * out.mc.stderr_, 1e-9);
    return out;
}

}  // namespace fatpart
