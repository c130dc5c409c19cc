#pragma once

#include "fatpart/ensembles.hpp"
#include "fatpart/numeric.hpp"
#include "fatpart/ratmat.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fatpart {

// Combinatorial map: cycles over signed side labels +-1..+-n. Corner label a
// is the corner traversed immediately after side a in its face cycle.
struct RibbonGraph {
    int n = 0;
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<int>> vertices;

    int face_count() const { return static_cast<int>(faces.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

struct GraphValidation {
    bool ok = false;
    int genus = -1;
    std::vector<std::string> violations;
};

// Checks label coverage, the map convention face_perm = flip o vertex_perm^-1,
// connectivity, and that F - n + V = 2 - 2g for a nonnegative integer g.
GraphValidation validate_graph(const RibbonGraph& g);

RibbonGraph builtin_graph(const std::string& name, int p = 0);

struct CornerSpec {
    enum class Type { identity, projector, explicit_matrix, ensemble };
    Type type = Type::identity;
    int l = 0;  // projector rank
    // explicit complex entries, exact: entries[i][j] = {re, im}
    std::vector<std::vector<std::array<Rat, 2>>> entries;
    std::optional<EnsembleSpec> ensemble;

    static CornerSpec Identity() { return {}; }
    static CornerSpec J(int l);
    static CornerSpec Explicit(const RatMat& re);
    static CornerSpec Ensemble(const EnsembleSpec& e);

    bool is_placeholder() const { return type == Type::ensemble; }
    // identity / projector / explicit with zero imaginary part
    bool is_exact_real() const;
    RatMat exact_matrix(int N) const;
    Eigen::MatrixXcd complex_matrix(int N) const;

    friend bool operator==(const CornerSpec&, const CornerSpec&) = default;
};

struct CornerAssignment {
    int N = 1;
    std::map<int, CornerSpec> corners;  // one entry per signed label

    const CornerSpec& at(int label) const;
    void require_complete(int n) const;

    friend bool operator==(const CornerAssignment&, const CornerAssignment&) = default;
};

struct Monodromies {
    std::vector<Eigen::MatrixXcd> face;
    std::vector<Eigen::MatrixXcd> vertex;
    std::vector<Eigen::MatrixXcd> dressed_face;  // filled only when Z is given
};

// Products start at the smallest absolute label of each cycle (positive label
// first on a tie); downstream consumers only use traces and Schur values,
// which are cycle-invariant. Z maps edge i -> Z_i; Z_{-i} is its adjoint.
// corner_override substitutes matrices for individual corner labels (used to
// inject sampled ensemble matrices); placeholder corners without an override
// are an error.
Monodromies monodromies(const RibbonGraph& g, const CornerAssignment& a,
                        const std::map<int, Eigen::MatrixXcd>* Z = nullptr,
                        const std::map<int, Eigen::MatrixXcd>* corner_override = nullptr);

// Exact product of the corner matrices around one vertex; throws if a corner
// there is a placeholder or has imaginary entries.
RatMat exact_vertex_monodromy(const RibbonGraph& g, const CornerAssignment& a, int vertex_index);

// Graph file: canonical JSON with fields n, N, faces, vertices, corners.
std::string graph_to_json(const RibbonGraph& g, const CornerAssignment& a);
std::pair<RibbonGraph, CornerAssignment> graph_from_json(const std::string& text);
std::pair<RibbonGraph, CornerAssignment> load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const RibbonGraph& g, const CornerAssignment& a);

}  // namespace fatpart
