#include "fatpart/symfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fatpart {

Specialization Specialization::p_of(Rat a_) {
    Specialization s;
    s.base = Base::p_of_a;
    s.a = std::move(a_);
    return s;
}

Specialization Specialization::miwa_vars(int sign, std::vector<Rat> xs) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("miwa sign must be +-1");
    Specialization s;
    s.base = Base::miwa;
    s.miwa_sign = sign;
    s.values = std::move(xs);
    return s;
}

Specialization Specialization::explicit_ps(std::vector<Rat> ps) {
    Specialization s;
    s.base = Base::explicit_values;
    s.values = std::move(ps);
    return s;
}

Specialization Specialization::scaled(const Rat& c, Specialization inner) {
    inner.scale *= c;
    return inner;
}

namespace {
std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}
}  // namespace

Specialization Specialization::parse(const std::string& s) {
    if (s == "pinf") return pinf();
    if (s.rfind("pa:", 0) == 0) return p_of(parse_rational(s.substr(3)));
    if (s.rfind("miwa:", 0) == 0) {
        std::string rest = s.substr(5);
        if (rest.size() < 2 || (rest[0] != '+' && rest[0] != '-') || rest[1] != ':')
            throw std::invalid_argument("bad miwa spec '" + s + "'");
        return miwa_vars(rest[0] == '+' ? 1 : -1, parse_rat_list(rest.substr(2)));
    }
    if (s.rfind("scale:", 0) == 0) {
        std::string rest = s.substr(6);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad scale spec '" + s + "'");
        return scaled(parse_rational(rest.substr(0, colon)), parse(rest.substr(colon + 1)));
    }
    if (s.rfind("explicit:", 0) == 0) return explicit_ps(parse_rat_list(s.substr(9)));
    throw std::invalid_argument("unknown specialization '" + s + "'");
}

std::string Specialization::to_string() const {
    std::string core;
    switch (base) {
        case Base::p_infinity:
            core = "pinf";
            break;
        case Base::p_of_a:
            core = "pa:" + format_rational(a);
            break;
        case Base::miwa: {
            core = std::string("miwa:") + (miwa_sign > 0 ? "+" : "-") + ":";
            for (size_t i = 0; i < values.size(); ++i) {
                if (i) core += ',';
                core += format_rational(values[i]);
            }
            break;
        }
        case Base::explicit_values: {
            core = "explicit:";
            for (size_t i = 0; i < values.size(); ++i) {
                if (i) core += ',';
                core += format_rational(values[i]);
            }
            break;
        }
    }
    if (scale != 1) return "scale:" + format_rational(scale) + ":" + core;
    return core;
}

namespace {
// |scale| when it is a positive integer
std::optional<long> integer_magnitude(const Rat& scale) {
    if (denominator(scale) != 1) return std::nullopt;
    Int n = numerator(scale);
    if (n < 0) n = -n;
    if (n > 1000000) return std::nullopt;
    return n.convert_to<long>();
}
}  // namespace

std::optional<long> Specialization::length_bound() const {
    if (scale == 0) return 0;
    if (base == Base::miwa) {
        auto m = integer_magnitude(scale);
        if (!m) return std::nullopt;
        int eff_sign = miwa_sign * (scale > 0 ? 1 : -1);
        if (eff_sign > 0) return *m * static_cast<long>(values.size());
        return std::nullopt;
    }
    if (base == Base::p_of_a) {
        Rat eff = scale * a;
        if (denominator(eff) == 1 && numerator(eff) >= 0 && numerator(eff) <= 1000000)
            return numerator(eff).convert_to<long>();
    }
    return std::nullopt;
}

std::optional<long> Specialization::width_bound() const {
    if (scale == 0) return 0;
    if (base == Base::miwa) {
        auto m = integer_magnitude(scale);
        if (!m) return std::nullopt;
        int eff_sign = miwa_sign * (scale > 0 ? 1 : -1);
        if (eff_sign < 0) return *m * static_cast<long>(values.size());
        return std::nullopt;
    }
    if (base == Base::p_of_a) {
        Rat eff = scale * a;
        if (denominator(eff) == 1 && numerator(eff) <= 0 && numerator(eff) >= -1000000)
            return (-numerator(eff)).convert_to<long>();
    }
    return std::nullopt;
}

cplx schur_from_eigenvalues(const Partition& lam, const std::vector<cplx>& xs) {
    if (lam.length() > static_cast<int>(xs.size())) return cplx(0.0, 0.0);
    PowerSums<cplx> ps;
    ps.values.assign(static_cast<size_t>(lam.weight()), cplx(0.0, 0.0));
    for (int m = 1; m <= lam.weight(); ++m) {
        cplx s(0.0, 0.0);
        for (const cplx& x : xs) s += std::pow(x, m);
        ps.values[static_cast<size_t>(m - 1)] = s;
    }
    return schur_from_power_sums(lam, ps);
}

cplx schur_of_matrix(const Partition& lam, const Eigen::MatrixXcd& X) {
    if (lam.weight() > kDegreeCap)
        throw std::invalid_argument("schur_of_matrix: weight exceeds degree cap");
    if (lam.length() > X.rows()) return cplx(0.0, 0.0);
    PowerSums<cplx> ps;
    ps.values.reserve(static_cast<size_t>(lam.weight()));
    Eigen::MatrixXcd acc = X;
    for (int m = 1; m <= lam.weight(); ++m) {
        ps.values.push_back(acc.trace());
        if (m < lam.weight()) acc = acc * X;
    }
    return schur_from_power_sums(lam, ps);
}

Rat schur_of_matrix(const Partition& lam, const RatMat& X) {
    if (lam.weight() > kDegreeCap)
        throw std::invalid_argument("schur_of_matrix: weight exceeds degree cap");
    if (lam.length() > X.order()) return Rat(0);
    PowerSums<Rat> ps;
    ps.values = X.power_sums(lam.weight());
    return schur_from_power_sums(lam, ps);
}

namespace {

// beta numbers of lam padded to n rows, strictly decreasing
std::vector<int> beta_set(const Partition& lam, int n) {
    std::vector<int> b(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) b[static_cast<size_t>(i - 1)] = lam.part(i) + n - i;
    return b;
}

using MnKey = std::pair<std::vector<int>, size_t>;

Int mn_rec(std::vector<int> beta, const std::vector<int>& mu, size_t k,
           std::map<MnKey, Int>& memo) {
    if (k == mu.size()) return 1;  // beta weight is zero by arithmetic
    auto it = memo.find({beta, k});
    if (it != memo.end()) return it->second;
    const int r = mu[k];
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int nb = beta[i] - r;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int crossings = 0;
        for (int b : beta)
            if (b > nb && b < beta[i]) ++crossings;
        std::vector<int> next = beta;
        next[i] = nb;
        std::sort(next.begin(), next.end(), std::greater<int>());
        Int sub = mn_rec(std::move(next), mu, k + 1, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo[{std::move(beta), k}] = total;
    return total;
}

}  // namespace

Int mn_character(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("character requires |lambda| = |mu|");
    if (lam.weight() > kCharacterWeightCap)
        throw std::invalid_argument("character weight exceeds cap " +
                                    std::to_string(kCharacterWeightCap));
    if (lam.weight() == 0) return 1;
    std::map<MnKey, Int> memo;
    return mn_rec(beta_set(lam, lam.length()), mu.parts(), 0, memo);
}

Int cycle_type_order(const Partition& mu) {
    Int z = 1;
    int run = 0;
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        ++run;
        z *= p[i];
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            z *= factorial(run);
            run = 0;
        }
    }
    return z;
}

Rat phi_character(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("phi_character requires |lambda| = |mu|");
    Int chi = mn_character(lam, mu);
    return Rat(chi * factorial(lam.weight()), cycle_type_order(mu) * dim_symmetric_group(lam));
}

Rat cauchy_littlewood_check(const RatMat& X, const PowerSums<Rat>& p, int D) {
    if (D > p.K()) throw std::invalid_argument("cauchy_littlewood_check: D exceeds K");
    std::vector<Rat> trs = X.power_sums(D);
    PowerSums<Rat> u;
    u.values.resize(static_cast<size_t>(D));
    for (int m = 1; m <= D; ++m) u.values[static_cast<size_t>(m - 1)] = p.p(m) * trs[static_cast<size_t>(m - 1)];
    std::vector<Rat> lhs = elementary_schur(u, D);
    Rat worst = 0;
    for (int d = 0; d <= D; ++d) {
        PartitionConstraints c;
        c.weight_min = c.weight_max = d;
        Rat rhs = 0;
        for (const Partition& lam : enumerate_partitions(c))
            rhs += schur_of_matrix(lam, X) * schur_from_power_sums(lam, p);
        Rat diff = lhs[static_cast<size_t>(d)] - rhs;
        if (diff < 0) diff = -diff;
        if (diff > worst) worst = diff;
    }
    return worst;
}

}  // namespace fatpart
