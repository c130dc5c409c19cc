#include "fatpart/config.hpp"
#include "fatpart/dse.hpp"
#include "fatpart/ensembles.hpp"
#include "fatpart/series.hpp"
#include "fatpart/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace fatpart;
using nlohmann::json;

namespace {

struct CommonOpts {
    long samples = 0;
    uint64_t seed = 20240801;
    int threads = 0;
    int cutoff = 8;
    std::string format = "records";
    std::string graph_file;
    std::string spec = "pinf";
};

void emit(const std::vector<VerificationReport>& reports, const std::string& format) {
    for (const auto& r : reports)
        std::cout << (format == "human" ? report_human(r) : report_record(r)) << "\n";
}

json series_value_json(const SeriesValue& sv) {
    return json{{"value", format_rational(sv.value)},
                {"value_double", sv.as_double()},
                {"max_weight", sv.max_weight},
                {"truncated_exactly", sv.truncated_exactly},
                {"term_count", sv.term_count}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fat-partition Schur series, matrix-model samplers and verification suite"};
    app.require_subcommand(1);

    CommonOpts o;
    app.add_option("--seed", o.seed, "RNG seed");
    app.add_option("--samples", o.samples, "Monte-Carlo sample count (0: per-case default)");
    app.add_option("--threads", o.threads, "worker cap (overrides FATPART_THREADS)");
    app.add_option("--format", o.format, "records|human")->check(CLI::IsMember({"records", "human"}));

    // partitions enum
    auto* partitions = app.add_subcommand("partitions", "partition combinatorics");
    auto* penum = partitions->add_subcommand("enum", "enumerate partitions under constraints");
    int wmin = 0, wmax = 0;
    std::string pclass = "all";
    int max_length = 0, max_part = 0;
    penum->add_option("--min-weight", wmin);
    penum->add_option("--max-weight", wmax)->required();
    penum->add_option("--class", pclass)->check(CLI::IsMember({"all", "fat", "even", "strict"}));
    penum->add_option("--max-length", max_length);
    penum->add_option("--max-part", max_part);

    // schur eval
    auto* schur = app.add_subcommand("schur", "Schur function evaluation");
    auto* seval = schur->add_subcommand("eval", "evaluate s_lambda at a specialization");
    std::string lambda_str = "-";
    seval->add_option("--lambda", lambda_str)->required();
    seval->add_option("--spec", o.spec, "specialization string");

    // charmap
    auto* charmap = app.add_subcommand("charmap", "character-map coefficient phi_lambda(mu)");
    std::string mu_str = "-";
    charmap->add_option("--lambda", lambda_str)->required();
    charmap->add_option("--mu", mu_str)->required();

    // avg
    auto* avg = app.add_subcommand("avg", "ensemble Schur averages");
    std::string ens_str = "sp:k=1";
    bool closed_only = false;
    avg->add_option("--ensemble", ens_str)->required();
    avg->add_option("--lambda", lambda_str)->required();
    avg->add_flag("--closed-form", closed_only, "print the closed form only, no sampling");

    // series eval
    auto* series = app.add_subcommand("series", "partition series");
    auto* sev = series->add_subcommand("eval", "evaluate a truncated series");
    std::string kind = "zu-mm";
    std::string config_file, r_str = "1";
    int series_N = 2, p_exp = 1;
    sev->add_option("--kind", kind)
        ->check(CLI::IsMember({"zu-mm", "mixed", "kp-hyp", "dkp-hyp", "dse-borodin", "dse-star"}));
    sev->add_option("--config", config_file, "model config file (zu-mm, mixed)");
    sev->add_option("--spec", o.spec, "power-sum specialization (hyp/dse kinds)");
    sev->add_option("--r", r_str, "content factor, e.g. s=1/2,p=1,d=3");
    sev->add_option("--N", series_N);
    sev->add_option("--cutoff", o.cutoff);
    sev->add_option("--p-exp", p_exp);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "solvability classification");
    bool permissive = false;
    classify_cmd->add_option("--config", config_file)->required();
    classify_cmd->add_flag("--permissive", permissive);

    // graph validate
    auto* graph = app.add_subcommand("graph", "ribbon graph utilities");
    auto* gval = graph->add_subcommand("validate", "validate a graph file");
    gval->add_option("--graph", o.graph_file)->required();

    // dse sample
    auto* dse_cmd = app.add_subcommand("dse", "discrete symplectic ensemble");
    auto* dsample = dse_cmd->add_subcommand("sample", "draw partitions, one per line");
    std::string dse_kind = "borodin";
    int dse_N = 1, dse_pexp = 1;
    long dse_count = 100;
    dsample->add_option("--kind", dse_kind)->check(CLI::IsMember({"borodin", "star"}));
    dsample->add_option("--spec", o.spec)->required();
    dsample->add_option("--N", dse_N);
    dsample->add_option("--cutoff", o.cutoff);
    dsample->add_option("--count", dse_count);
    dsample->add_option("--p-exp", dse_pexp);

    // verify
    auto* verify = app.add_subcommand("verify", "named verification cases");
    std::string case_name = "all";
    bool quick = false;
    verify->add_option("case", case_name, "case name or 'all'");
    verify->add_flag("--quick", quick, "reduced sample counts");
    bool list_cases = false;
    verify->add_flag("--list", list_cases, "list case names");
    int narrow_k = 0, narrow_N = 0;
    long narrow_L = -1;
    std::string narrow_lambda, chain_a, chain_x;
    int chain_l = 0;
    verify->add_option("--k", narrow_k, "restrict sweep to one symplectic half-order");
    verify->add_option("--N", narrow_N, "restrict sweep to one matrix order");
    verify->add_option("--L", narrow_L, "restrict the quaternion sweep to one det exponent");
    verify->add_option("--lambda", narrow_lambda, "restrict sweep to one partition");
    verify->add_option("--l", chain_l, "chain-equalities projector rank");
    verify->add_option("--a", chain_a, "chain-equalities det exponent parameter");
    verify->add_option("--x", chain_x, "chain-equalities Miwa variable");

    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*penum) {
            PartitionConstraints c;
            c.weight_min = wmin;
            c.weight_max = wmax;
            if (max_length > 0) c.max_length = max_length;
            if (max_part > 0) c.max_part = max_part;
            if (pclass == "fat") c.filter = PartitionConstraints::Filter::fat;
            if (pclass == "even") c.filter = PartitionConstraints::Filter::even_parts;
            if (pclass == "strict") c.filter = PartitionConstraints::Filter::strict;
            for (const Partition& lam : enumerate_partitions(c)) std::cout << lam.to_string() << "\n";
            return 0;
        }
        if (*seval) {
            Partition lam = Partition::parse(lambda_str);
            Specialization s = Specialization::parse(o.spec);
            Rat v = schur_from_power_sums(lam, s.power_sums<Rat>(lam.weight()));
            json j{{"lambda", lam.to_string()},
                   {"spec", s.to_string()},
                   {"value", format_rational(v)},
                   {"value_double", to_double(v)}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*charmap) {
            Partition lam = Partition::parse(lambda_str);
            Partition mu = Partition::parse(mu_str);
            Rat v = phi_character(lam, mu);
            json j{{"lambda", lam.to_string()},
                   {"mu", mu.to_string()},
                   {"phi", format_rational(v)},
                   {"phi_double", to_double(v)}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*avg) {
            EnsembleSpec e = EnsembleSpec::parse(ens_str);
            Partition lam = Partition::parse(lambda_str);
            json j{{"ensemble", e.to_string()}, {"lambda", lam.to_string()}};
            if (e.kind != EnsembleSpec::Kind::complex_ginibre) {
                Rat cf = closed_form_schur_average(e, lam);
                j["closed_form"] = format_rational(cf);
                j["closed_form_double"] = to_double(cf);
            }
            if (!closed_only) {
                long S = o.samples > 0 ? o.samples : 100000;
                MCEstimate mc = mc_schur_average(e, lam, S, o.seed, o.threads);
                j["mc"] = {{"mean", mc.mean},
                           {"stderr", mc.stderr_},
                           {"samples", mc.samples},
                           {"seed", mc.seed}};
            }
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*sev) {
            SeriesValue sv;
            if (kind == "zu-mm" || kind == "mixed") {
                if (config_file.empty()) throw std::invalid_argument("--config required");
                ModelConfig cfg = load_model_config(config_file);
                if (sev->count("--cutoff") > 0) cfg.cutoff = o.cutoff;
                sv = kind == "zu-mm" ? zu_mm_series(cfg) : mixed_series(cfg);
            } else if (kind == "kp-hyp" || kind == "dkp-hyp") {
                sv = hyp_tau_series(kind == "kp-hyp" ? HypKind::kp : HypKind::dkp,
                                    ContentFactor::parse(r_str), Specialization::parse(o.spec),
                                    series_N, o.cutoff);
            } else {
                sv = dse_partition_function(kind == "dse-borodin" ? DseKind::borodin : DseKind::star,
                                            Specialization::parse(o.spec), series_N, o.cutoff,
                                            p_exp);
            }
            json j = series_value_json(sv);
            j["kind"] = kind;
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*classify_cmd) {
            ModelConfig cfg = load_model_config(config_file);
            Solvability s = classify_solvability(cfg, permissive);
            json j{{"solvable", s.solvable},
                   {"exactly_solvable", s.exactly_solvable},
                   {"reasons", s.reasons}};
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (*gval) {
            auto [g, a] = load_graph_file(o.graph_file);
            GraphValidation v = validate_graph(g);
            json j{{"ok", v.ok}, {"genus", v.genus}, {"violations", v.violations}};
            std::cout << j.dump() << "\n";
            return v.ok ? 0 : 1;
        }
        if (*dsample) {
            auto draws = dse_sample(dse_kind == "borodin" ? DseKind::borodin : DseKind::star,
                                    Specialization::parse(o.spec), dse_N, o.cutoff, dse_count,
                                    o.seed, dse_pexp);
            for (const Partition& lam : draws) std::cout << lam.to_string() << "\n";
            return 0;
        }
        if (*verify) {
            if (list_cases) {
                for (const auto& n : verify_case_names()) std::cout << n << "\n";
                return 0;
            }
            VerifyOptions vo;
            vo.samples = o.samples;
            vo.seed = o.seed;
            vo.threads = o.threads;
            vo.quick = quick;
            if (narrow_k > 0) vo.k = narrow_k;
            if (narrow_N > 0) vo.N = narrow_N;
            if (narrow_L >= 0) vo.L = narrow_L;
            if (!narrow_lambda.empty()) vo.lambda = Partition::parse(narrow_lambda);
            if (chain_l > 0) vo.l = chain_l;
            if (!chain_a.empty()) vo.a = parse_rational(chain_a);
            if (!chain_x.empty()) vo.x = parse_rational(chain_x);
            std::vector<VerificationReport> reports =
                case_name == "all" ? run_verify_all(vo) : run_verify_case(case_name, vo);
            emit(reports, o.format);
            return all_pass(reports) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
