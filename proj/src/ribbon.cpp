#include "fatpart/ribbon.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fatpart {

using nlohmann::json;

namespace {

// next-element map of the disjoint cycles
std::optional<std::map<int, int>> cycles_to_perm(const std::vector<std::vector<int>>& cycles,
                                                 int n, std::string* err) {
    std::map<int, int> perm;
    std::set<int> seen;
    for (const auto& cyc : cycles) {
        if (cyc.empty()) {
            if (err) *err = "empty cycle";
            return std::nullopt;
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            if (a == 0 || std::abs(a) > n) {
                if (err) *err = "label " + std::to_string(a) + " out of range";
                return std::nullopt;
            }
            if (!seen.insert(a).second) {
                if (err) *err = "label " + std::to_string(a) + " appears twice";
                return std::nullopt;
            }
            perm[a] = cyc[(i + 1) % cyc.size()];
        }
    }
    if (static_cast<int>(seen.size()) != 2 * n) {
        if (err) *err = "labels do not cover +-1..+-" + std::to_string(n);
        return std::nullopt;
    }
    return perm;
}

}  // namespace

GraphValidation validate_graph(const RibbonGraph& g) {
    GraphValidation out;
    if (g.n < 1) {
        out.violations.push_back("graph needs at least one edge");
        return out;
    }
    std::string err;
    auto fp = cycles_to_perm(g.faces, g.n, &err);
    if (!fp) out.violations.push_back("faces: " + err);
    auto vp = cycles_to_perm(g.vertices, g.n, &err);
    if (!vp) out.violations.push_back("vertices: " + err);
    if (!fp || !vp) return out;

    // face_perm must equal a -> -vertex_perm^{-1}(a)
    std::map<int, int> vinv;
    for (auto [a, b] : *vp) vinv[b] = a;
    bool perm_ok = true;
    for (auto [a, b] : *fp)
        if (b != -vinv[a]) perm_ok = false;
    if (!perm_ok)
        out.violations.push_back("face cycles are not consistent with vertex cycles "
                                 "(face_perm != flip o vertex_perm^-1)");

    // connectivity of the orbit of <face_perm, flip>
    std::set<int> reached;
    std::vector<int> stack{1};
    reached.insert(1);
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : {fp->at(a), -a}) {
            if (reached.insert(b).second) stack.push_back(b);
        }
    }
    if (static_cast<int>(reached.size()) != 2 * g.n)
        out.violations.push_back("graph is not connected");

    int chi = g.face_count() - g.n + g.vertex_count();
    if (chi > 2 || chi % 2 != 0) {
        out.violations.push_back("Euler characteristic " + std::to_string(chi) +
                                 " is not 2-2g for a nonnegative integer g");
    } else if (out.violations.empty()) {
        out.genus = (2 - chi) / 2;
    }
    out.ok = out.violations.empty();
    return out;
}

RibbonGraph builtin_graph(const std::string& name, int p) {
    RibbonGraph g;
    if (name == "gamma1") {
        g.n = 1;
        g.faces = {{1, -1}};
        g.vertices = {{1}, {-1}};
    } else if (name == "gamma2") {
        g.n = 1;
        g.faces = {{1}, {-1}};
        g.vertices = {{1, -1}};
    } else if (name == "gamma3") {
        if (p < 1) throw std::invalid_argument("gamma3 requires p >= 1");
        g.n = p;
        std::vector<int> face;
        for (int i = 1; i <= p; ++i) face.push_back(i);
        for (int i = p; i >= 1; --i) face.push_back(-i);
        g.faces = {face};
        g.vertices.push_back({-1});
        for (int i = 1; i < p; ++i) g.vertices.push_back({i, -(i + 1)});
        g.vertices.push_back({p});
    } else if (name == "gamma4") {
        g.n = 2;
        g.faces = {{1, 2}, {-1, -2}};
        g.vertices = {{1, -2}, {2, -1}};
    } else if (name == "gamma5") {
        g.n = 2;
        g.faces = {{1, -1, 2}, {-2}};
        g.vertices = {{1}, {-1, 2, -2}};
    } else {
        throw std::invalid_argument("unknown builtin graph '" + name + "'");
    }
    GraphValidation v = validate_graph(g);
    if (!v.ok) throw std::logic_error("builtin graph failed validation: " + name);
    return g;
}

CornerSpec CornerSpec::J(int l) {
    CornerSpec c;
    c.type = Type::projector;
    c.l = l;
    return c;
}

CornerSpec CornerSpec::Explicit(const RatMat& re) {
    CornerSpec c;
    c.type = Type::explicit_matrix;
    int n = re.order();
    c.entries.assign(static_cast<size_t>(n), std::vector<std::array<Rat, 2>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = {re(i, j), Rat(0)};
    return c;
}

CornerSpec CornerSpec::Ensemble(const EnsembleSpec& e) {
    CornerSpec c;
    c.type = Type::ensemble;
    c.ensemble = e;
    return c;
}

bool CornerSpec::is_exact_real() const {
    if (type == Type::identity || type == Type::projector) return true;
    if (type != Type::explicit_matrix) return false;
    for (const auto& row : entries)
        for (const auto& e : row)
            if (e[1] != 0) return false;
    return true;
}

RatMat CornerSpec::exact_matrix(int N) const {
    switch (type) {
        case Type::identity: return RatMat::identity(N);
        case Type::projector: return RatMat::projector(N, l);
        case Type::explicit_matrix: {
            if (static_cast<int>(entries.size()) != N)
                throw std::invalid_argument("explicit corner matrix order mismatch");
            RatMat m(N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const auto& e = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (e[1] != 0)
                        throw std::invalid_argument("corner matrix has imaginary entries");
                    m(i, j) = e[0];
                }
            return m;
        }
        case Type::ensemble:
            throw std::invalid_argument("an ensemble placeholder has no fixed matrix");
    }
    throw std::logic_error("unreachable");
}

Eigen::MatrixXcd CornerSpec::complex_matrix(int N) const {
    switch (type) {
        case Type::identity:
            return Eigen::MatrixXcd::Identity(N, N);
        case Type::projector: {
            if (l < 0 || l > N) throw std::invalid_argument("projector rank out of range");
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
            for (int i = 0; i < l; ++i) m(i, i) = 1.0;
            return m;
        }
        case Type::explicit_matrix: {
            if (static_cast<int>(entries.size()) != N)
                throw std::invalid_argument("explicit corner matrix order mismatch");
            Eigen::MatrixXcd m(N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const auto& e = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    m(i, j) = cplx(to_double(e[0]), to_double(e[1]));
                }
            return m;
        }
        case Type::ensemble:
            throw std::invalid_argument("an ensemble placeholder has no fixed matrix");
    }
    throw std::logic_error("unreachable");
}

const CornerSpec& CornerAssignment::at(int label) const {
    auto it = corners.find(label);
    if (it == corners.end())
        throw std::invalid_argument("no corner spec for label " + std::to_string(label));
    return it->second;
}

void CornerAssignment::require_complete(int n) const {
    for (int i = 1; i <= n; ++i) {
        at(i);
        at(-i);
    }
}

namespace {

// rotate so the smallest |label| leads, positive sign first on a tie
std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    size_t best = 0;
    for (size_t i = 1; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[best];
        if (std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a > b)) best = i;
    }
    std::vector<int> out;
    out.reserve(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) out.push_back(cyc[(best + i) % cyc.size()]);
    return out;
}

}  // namespace

Monodromies monodromies(const RibbonGraph& g, const CornerAssignment& a,
                        const std::map<int, Eigen::MatrixXcd>* Z,
                        const std::map<int, Eigen::MatrixXcd>* corner_override) {
    a.require_complete(g.n);
    const int N = a.N;
    auto corner_matrix = [&](int label) -> Eigen::MatrixXcd {
        if (corner_override) {
            auto it = corner_override->find(label);
            if (it != corner_override->end()) return it->second;
        }
        const CornerSpec& spec = a.at(label);
        if (spec.is_placeholder())
            throw std::invalid_argument("corner " + std::to_string(label) +
                                        " is an ensemble placeholder; supply a sampled matrix");
        return spec.complex_matrix(N);
    };
    auto edge_matrix = [&](int label) -> Eigen::MatrixXcd {
        if (!Z) throw std::logic_error("no edge matrices supplied");
        if (label > 0) {
            auto it = Z->find(label);
            if (it == Z->end()) throw std::invalid_argument("missing Z for edge " + std::to_string(label));
            return it->second;
        }
        auto it = Z->find(-label);
        if (it == Z->end()) throw std::invalid_argument("missing Z for edge " + std::to_string(-label));
        return it->second.adjoint();
    };

    Monodromies out;
    for (const auto& face : g.faces) {
        std::vector<int> cyc = canonical_cycle(face);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(N, N);
        for (int lab : cyc) m = m * corner_matrix(lab);
        out.face.push_back(std::move(m));
        if (Z) {
            Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(N, N);
            for (int lab : cyc) d = d * edge_matrix(lab) * corner_matrix(lab);
            out.dressed_face.push_back(std::move(d));
        }
    }
    for (const auto& vert : g.vertices) {
        std::vector<int> cyc = canonical_cycle(vert);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(N, N);
        for (int lab : cyc) m = m * corner_matrix(lab);
        out.vertex.push_back(std::move(m));
    }
    return out;
}

RatMat exact_vertex_monodromy(const RibbonGraph& g, const CornerAssignment& a, int vertex_index) {
    const auto& vert = g.vertices.at(static_cast<size_t>(vertex_index));
    RatMat m = RatMat::identity(a.N);
    for (int lab : canonical_cycle(vert)) m = m * a.at(lab).exact_matrix(a.N);
    return m;
}

namespace {

json corner_to_json(const CornerSpec& c) {
    json j;
    switch (c.type) {
        case CornerSpec::Type::identity:
            j["type"] = "identity";
            break;
        case CornerSpec::Type::projector:
            j["type"] = "J";
            j["l"] = c.l;
            break;
        case CornerSpec::Type::explicit_matrix: {
            j["type"] = "explicit";
            json m = json::array();
            for (const auto& row : c.entries) {
                json r = json::array();
                for (const auto& e : row)
                    r.push_back(json::array({format_rational(e[0]), format_rational(e[1])}));
                m.push_back(r);
            }
            j["matrix"] = m;
            break;
        }
        case CornerSpec::Type::ensemble:
            j["type"] = "ensemble";
            j["spec"] = c.ensemble->to_string();
            break;
    }
    return j;
}

Rat json_rat(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number_float()) {
        std::ostringstream ss;
        ss.precision(17);
        ss << v.get<double>();
        return parse_rational(ss.str());
    }
    throw std::invalid_argument("bad numeric entry in graph file");
}

CornerSpec corner_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "identity") return CornerSpec::Identity();
    if (type == "J") return CornerSpec::J(j.at("l").get<int>());
    if (type == "ensemble") return CornerSpec::Ensemble(EnsembleSpec::parse(j.at("spec").get<std::string>()));
    if (type == "explicit") {
        CornerSpec c;
        c.type = CornerSpec::Type::explicit_matrix;
        for (const auto& row : j.at("matrix")) {
            std::vector<std::array<Rat, 2>> r;
            for (const auto& e : row) r.push_back({json_rat(e.at(0)), json_rat(e.at(1))});
            c.entries.push_back(std::move(r));
        }
        return c;
    }
    throw std::invalid_argument("unknown corner type '" + type + "'");
}

}  // namespace

std::string graph_to_json(const RibbonGraph& g, const CornerAssignment& a) {
    json j;
    j["n"] = g.n;
    j["N"] = a.N;
    j["faces"] = g.faces;
    j["vertices"] = g.vertices;
    json corners = json::object();
    for (const auto& [label, spec] : a.corners) corners[std::to_string(label)] = corner_to_json(spec);
    j["corners"] = corners;
    return j.dump(2) + "\n";
}

std::pair<RibbonGraph, CornerAssignment> graph_from_json(const std::string& text) {
    json j = json::parse(text);
    RibbonGraph g;
    g.n = j.at("n").get<int>();
    g.faces = j.at("faces").get<std::vector<std::vector<int>>>();
    g.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
    CornerAssignment a;
    a.N = j.at("N").get<int>();
    for (const auto& [key, val] : j.at("corners").items())
        a.corners[std::stoi(key)] = corner_from_json(val);
    return {std::move(g), std::move(a)};
}

std::pair<RibbonGraph, CornerAssignment> load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
}

void save_graph_file(const std::string& path, const RibbonGraph& g, const CornerAssignment& a) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file '" + path + "'");
    out << graph_to_json(g, a);
}

}  // namespace fatpart
