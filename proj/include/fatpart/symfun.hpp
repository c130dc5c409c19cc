#pragma once

#include "fatpart/numeric.hpp"
#include "fatpart/partition.hpp"
#include "fatpart/ratmat.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <vector>

namespace fatpart {

// Weight cap for single Schur evaluations; series cutoffs must stay within it.
inline constexpr int kDegreeCap = 24;
// Murnaghan-Nakayama weight cap
inline constexpr int kCharacterWeightCap = 12;

template <class T>
struct PowerSums {
    std::vector<T> values;  // p_1 .. p_K
    int K() const { return static_cast<int>(values.size()); }
    const T& p(int m) const { return values[static_cast<size_t>(m - 1)]; }
};

// h_0..h_maxdeg from m*h_m = sum_{k<=m} p_k h_{m-k}
template <class T>
std::vector<T> elementary_schur(const PowerSums<T>& ps, int maxdeg) {
    if (maxdeg > ps.K())
        throw std::invalid_argument("elementary_schur: maxdeg exceeds truncation degree K");
    std::vector<T> h(static_cast<size_t>(maxdeg) + 1, T(0));
    h[0] = T(1);
    for (int m = 1; m <= maxdeg; ++m) {
        T s(0);
        for (int k = 1; k <= m; ++k) s += ps.p(k) * h[static_cast<size_t>(m - k)];
        h[static_cast<size_t>(m)] = s / T(m);
    }
    return h;
}

// Determinant by Gaussian elimination; pivots chosen by magnitude, which for
// exact scalars only matters as a non-zero test.
template <class T>
T det_in_place(std::vector<T>& m, int n) {
    T det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        double best = 0.0;
        for (int r = col; r < n; ++r) {
            double a = scalar_abs(m[static_cast<size_t>(r) * n + col]);
            if (!scalar_is_zero(m[static_cast<size_t>(r) * n + col]) && (piv < 0 || a > best)) {
                piv = r;
                best = a;
            }
        }
        if (piv < 0) return T(0);
        if (piv != col) {
            for (int j = col; j < n; ++j)
                std::swap(m[static_cast<size_t>(piv) * n + j], m[static_cast<size_t>(col) * n + j]);
            det = -det;
        }
        const T p = m[static_cast<size_t>(col) * n + col];
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            T f = m[static_cast<size_t>(r) * n + col] / p;
            if (scalar_is_zero(f)) continue;
            for (int j = col; j < n; ++j)
                m[static_cast<size_t>(r) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
        }
    }
    return det;
}

// Jacobi-Trudi: det[h_{lambda_i - i + j}]
template <class T>
T schur_from_power_sums(const Partition& lam, const PowerSums<T>& ps) {
    if (lam.weight() > ps.K())
        throw std::invalid_argument("schur_from_power_sums: weight " +
                                    std::to_string(lam.weight()) +
                                    " exceeds truncation degree " + std::to_string(ps.K()));
    const int l = lam.length();
    if (l == 0) return T(1);
    std::vector<T> h = elementary_schur(ps, lam.weight());
    std::vector<T> m(static_cast<size_t>(l) * static_cast<size_t>(l), T(0));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int d = lam.part(i) - i + j;
            if (d >= 0 && d <= lam.weight()) m[static_cast<size_t>(i - 1) * l + (j - 1)] = h[static_cast<size_t>(d)];
        }
    return det_in_place(m, l);
}

// Power-sum specialization menu. A scale factor multiplies
// every p_k termwise, so scaled sets compose by multiplying scales.
struct Specialization {
    enum class Base { explicit_values, p_infinity, p_of_a, miwa };
    Base base = Base::p_infinity;
    Rat scale = 1;
    std::vector<Rat> values;  // explicit p_1..p_K, or Miwa variables
    Rat a = 0;                // p_of_a parameter
    int miwa_sign = +1;

    static Specialization pinf() { return {}; }
    static Specialization p_of(Rat a_);
    static Specialization miwa_vars(int sign, std::vector<Rat> xs);
    static Specialization explicit_ps(std::vector<Rat> ps);
    static Specialization scaled(const Rat& c, Specialization inner);

    // Grammar: "pinf" | "pa:A" | "miwa:+:x1,x2" | "miwa:-:x" |
    //          "scale:C:SPEC" | "explicit:p1,p2,..."
    static Specialization parse(const std::string& s);
    std::string to_string() const;

    friend bool operator==(const Specialization&, const Specialization&) = default;

    bool is_rational() const { return true; }

    template <class T>
    PowerSums<T> power_sums(int K) const {
        if (K < 0) throw std::invalid_argument("negative truncation degree");
        PowerSums<T> out;
        out.values.assign(static_cast<size_t>(K), T(0));
        const T c = scalar_from_rat<T>(scale);
        switch (base) {
            case Base::p_infinity:
                if (K >= 1) out.values[0] = c;
                break;
            case Base::p_of_a:
                for (int k = 1; k <= K; ++k) out.values[static_cast<size_t>(k - 1)] = c * scalar_from_rat<T>(a);
                break;
            case Base::miwa:
                for (int k = 1; k <= K; ++k) {
                    T s(0);
                    for (const Rat& x : values) s += scalar_from_rat<T>(rat_pow(x, k));
                    out.values[static_cast<size_t>(k - 1)] = c * T(miwa_sign) * s;
                }
                break;
            case Base::explicit_values:
                if (K > static_cast<int>(values.size()))
                    throw std::invalid_argument("explicit power sums provide only K=" +
                                                std::to_string(values.size()));
                for (int k = 1; k <= K; ++k)
                    out.values[static_cast<size_t>(k - 1)] = c * scalar_from_rat<T>(values[static_cast<size_t>(k - 1)]);
                break;
        }
        return out;
    }

    // s_lambda vanishes when l(lambda) exceeds this bound (if present)
    std::optional<long> length_bound() const;
    // s_lambda vanishes when lambda_1 exceeds this bound (if present)
    std::optional<long> width_bound() const;
};

// 0 when l(lambda) > #eigenvalues; otherwise evaluated through power sums so
// coincident eigenvalues need no special handling.
cplx schur_from_eigenvalues(const Partition& lam, const std::vector<cplx>& xs);

cplx schur_of_matrix(const Partition& lam, const Eigen::MatrixXcd& X);
Rat schur_of_matrix(const Partition& lam, const RatMat& X);

// chi_lambda(mu) by Murnaghan-Nakayama (beta-number border strips, memoized)
Int mn_character(const Partition& lam, const Partition& mu);

Int cycle_type_order(const Partition& mu);  // z_mu

// phi_lambda(mu) = chi_lambda(mu) |lambda|! / (z_mu d_lambda)
Rat phi_character(const Partition& lam, const Partition& mu);

// Max per-degree residual of e^{sum p_m tr(X^m)/m} - sum_lambda s(X)s(p),
// degrees 0..D. Exactly zero for rational inputs.
Rat cauchy_littlewood_check(const RatMat& X, const PowerSums<Rat>& p, int D);

}  // namespace fatpart
