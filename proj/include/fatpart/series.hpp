#pragma once

#include "fatpart/ensembles.hpp"
#include "fatpart/partition.hpp"
#include "fatpart/ribbon.hpp"
#include "fatpart/symfun.hpp"

#include <map>
#include <set>
#include <vector>

namespace fatpart {

struct SeriesValue {
    Rat value = 0;
    int max_weight = 0;
    bool truncated_exactly = false;
    long term_count = 0;
    double as_double() const { return to_double(value); }
};

// Matrix-model configuration: face spec i is the coupling set p^(i) of face i
// before the built-in N-scaling that the series applies to every face.
struct ModelConfig {
    RibbonGraph graph;
    CornerAssignment assignment;
    std::vector<Specialization> face_specs;
    int N = 1;
    int cutoff = 0;
    std::map<int, EnsembleSpec> averaged_vertices;  // vertex index -> ensemble
};

// Graph partition function: sum over l(lambda) <= N, |lambda| <= cutoff of
// (s_lambda(N p_inf))^{-n} prod_faces s_lambda(N p^i) prod_verts s_lambda(V_i).
SeriesValue zu_mm_series(const ModelConfig& cfg);

// Same sum with each averaged vertex contributing its closed-form Schur
// average; symplectic/quaternion averaging restricts the sum to fat
// partitions, orthogonal averaging to even-part partitions, simultaneous
// averaging to partitions that are both.
SeriesValue mixed_series(const ModelConfig& cfg);

// Nonzero terms, in enumeration order (shared engine behind both series).
std::vector<std::pair<Partition, Rat>> model_series_terms(const ModelConfig& cfg);

// r(c) = scalar * prod_i (a_i + c) / prod_j (b_j + c)
struct ContentFactor {
    Rat scalar = 1;
    std::vector<Rat> num_shifts;
    std::vector<Rat> den_shifts;

    // "s=1/4,p=1,p=2,d=3" -> (1/4)(1+c)(2+c)/(3+c); "1" -> r == 1
    static ContentFactor parse(const std::string& s);
    std::string to_string() const;
    // prod over cells (i,j) of lambda of r(j-i); throws on a denominator pole,
    // naming the offending cell
    Rat over_cells(const Partition& lam) const;
};

enum class HypKind { kp, dkp };

// kp:  sum_{l(lambda)<=N} s_lambda(p) r_lambda prod_e s_lambda(extra_e)
// dkp: sum over fat mu∪mu with l(mu∪mu)<=N of the same data
SeriesValue hyp_tau_series(HypKind kind, const ContentFactor& r, const Specialization& p, int N,
                           int cutoff, const std::vector<Specialization>& extra_factors = {});
std::vector<std::pair<Partition, Rat>> hyp_tau_terms(HypKind kind, const ContentFactor& r,
                                                     const Specialization& p, int N, int cutoff,
                                                     const std::vector<Specialization>& extra_factors = {});

struct Solvability {
    bool solvable = true;
    bool exactly_solvable = false;
    std::vector<std::string> reasons;
};

// Exactly solvable iff genus 0, at most one face keeps a general coupling set
// (the rest are p_inf / p(a)), every constant vertex monodromy is idempotent
// (a J_l or the identity), and at most one vertex is averaged. In permissive
// mode several averaged vertices only produce a warning.
Solvability classify_solvability(const ModelConfig& cfg, bool permissive = false);

struct IntegrandSpec {
    // faces evaluated as det(1 - F_i)^{-N a}; other faces use their spec as
    // exp(sum_m (N/m) p_m tr F^m) (p_inf and Miwa sets only)
    std::map<int, Rat> det_faces;
};

struct McStats {
    long rejected = 0;         // |1 - eigenvalue| < 1e-8 in a det factor
    long radius_warnings = 0;  // |x z| >= 1 seen in an exp-trace face
};

MCEstimate mc_partition_function(const ModelConfig& cfg, const IntegrandSpec& integrand, long S,
                                 uint64_t seed, McStats* stats = nullptr, int threads = 0);

struct RelationCheck {
    MCEstimate mc;
    Rat rhs = 0;
    bool pass = false;
};

// Monte-Carlo check of the averaging relation
// E[prod_a s_{lambda^a}(F_a(X))] = delta * (s_lambda(N p_inf))^{-n} prod_a s_{lambda^a}(V_a).
RelationCheck schur_average_relation_check(const RibbonGraph& g, const CornerAssignment& a,
                                           const std::vector<Partition>& face_lambdas, long S,
                                           uint64_t seed, int threads = 0);

}  // namespace fatpart
