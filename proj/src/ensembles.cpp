#include "fatpart/ensembles.hpp"

#include "fatpart/symfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <sstream>

namespace fatpart {

EnsembleSpec EnsembleSpec::parse(const std::string& s) {
    EnsembleSpec e;
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad ensemble spec '" + s + "'");
    std::string head = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    auto get_field = [&](const std::string& key) -> std::optional<long> {
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad ensemble field '" + tok + "'");
            if (tok.substr(0, eq) == key) return std::stol(tok.substr(eq + 1));
        }
        return std::nullopt;
    };
    if (head == "gin") {
        e.kind = Kind::complex_ginibre;
        e.N = static_cast<int>(get_field("N").value());
    } else if (head == "sp") {
        e.kind = Kind::haar_symplectic;
        e.k = static_cast<int>(get_field("k").value());
    } else if (head == "orth") {
        e.kind = Kind::haar_orthogonal;
        e.N = static_cast<int>(get_field("N").value());
    } else if (head == "qgin") {
        e.kind = Kind::quaternion_ginibre;
        e.N = static_cast<int>(get_field("N").value());
        e.L = get_field("L").value_or(0);
    } else {
        throw std::invalid_argument("unknown ensemble kind '" + head + "'");
    }
    if ((e.kind == Kind::haar_symplectic ? e.k : e.N) < 1)
        throw std::invalid_argument("ensemble size must be >= 1");
    if (e.L < 0) throw std::invalid_argument("qgin exponent L must be >= 0");
    return e;
}

std::string EnsembleSpec::to_string() const {
    switch (kind) {
        case Kind::complex_ginibre: return "gin:N=" + std::to_string(N);
        case Kind::haar_symplectic: return "sp:k=" + std::to_string(k);
        case Kind::haar_orthogonal: return "orth:N=" + std::to_string(N);
        case Kind::quaternion_ginibre:
            return "qgin:N=" + std::to_string(N) + ",L=" + std::to_string(L);
    }
    return {};
}

int EnsembleSpec::matrix_order() const {
    switch (kind) {
        case Kind::complex_ginibre: return N;
        case Kind::haar_symplectic: return 2 * k;
        case Kind::haar_orthogonal: return N;
        case Kind::quaternion_ginibre: return 2 * N;
    }
    return 0;
}

Eigen::MatrixXcd sample_complex_ginibre(int N, RngStream& rng) {
    const double s = std::sqrt(0.5 / static_cast<double>(N));
    Eigen::MatrixXcd Z(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            Z(i, j) = cplx(s * rng.next_gaussian(), s * rng.next_gaussian());
    return Z;
}

Eigen::MatrixXd sample_haar_orthogonal(int N, RngStream& rng) {
    Eigen::MatrixXd A(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) A(i, j) = rng.next_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd Q = qr.householderQ();
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < N; ++j)
        if (R(j, j) < 0) Q.col(j) = -Q.col(j);
    return Q;
}

namespace {

double sp_log_density(const std::vector<double>& th) {
    double v = 0.0;
    const int k = static_cast<int>(th.size());
    for (int i = 0; i < k; ++i) {
        double s = std::sin(th[static_cast<size_t>(i)]);
        if (s <= 0.0) return -1e300;
        v += 2.0 * std::log(s);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            double d = std::cos(th[static_cast<size_t>(i)]) - std::cos(th[static_cast<size_t>(j)]);
            if (d == 0.0) return -1e300;
            v += 2.0 * std::log(std::abs(d));
        }
    return v;
}

// grid-maximized envelope for the unnormalized density, with head-room
double sp_envelope(int k) {
    static std::array<double, 4> cache{-1.0, -1.0, -1.0, -1.0};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache[static_cast<size_t>(k)] > 0.0) return cache[static_cast<size_t>(k)];
    const int grid = k == 1 ? 4096 : (k == 2 ? 256 : 64);
    std::vector<int> idx(static_cast<size_t>(k), 0);
    std::vector<double> th(static_cast<size_t>(k));
    double best = 0.0;
    for (;;) {
        for (int i = 0; i < k; ++i)
            th[static_cast<size_t>(i)] = (idx[static_cast<size_t>(i)] + 0.5) * M_PI / grid;
        best = std::max(best, std::exp(sp_log_density(th)));
        int c = 0;
        while (c < k && ++idx[static_cast<size_t>(c)] == grid) idx[static_cast<size_t>(c++)] = 0;
        if (c == k) break;
    }
    cache[static_cast<size_t>(k)] = best * 1.3;
    return cache[static_cast<size_t>(k)];
}

std::vector<double> sp_rejection(int k, RngStream& rng, SpDiagnostics* diag) {
    const double env = sp_envelope(k);
    std::vector<double> th(static_cast<size_t>(k));
    long tries = 0;
    for (;;) {
        ++tries;
        for (int i = 0; i < k; ++i) th[static_cast<size_t>(i)] = rng.next_uniform(0.0, M_PI);
        double f = std::exp(sp_log_density(th));
        if (f > env) throw std::logic_error("symplectic rejection envelope violated");
        if (rng.next_unit() <= f / env) break;
    }
    if (diag) {
        diag->acceptance_rate = 1.0 / static_cast<double>(tries);
        diag->burn_in = 0;
        diag->tuning_warning = false;
    }
    std::sort(th.begin(), th.end());
    return th;
}

std::vector<double> sp_metropolis(int k, RngStream& rng, SpDiagnostics* diag) {
    const long tune = 500;
    const long burn = 1000;
    const long thin = 10;
    std::vector<double> th(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        th[static_cast<size_t>(i)] = M_PI * (i + 1.0) / (k + 1.0);
    double logf = sp_log_density(th);
    double step = 0.5;
    long accepted = 0, proposed = 0;
    auto one_step = [&](bool tuning) {
        std::vector<double> prop = th;
        for (int i = 0; i < k; ++i) {
            double x = prop[static_cast<size_t>(i)] + step * rng.next_gaussian();
            // reflect into [0, pi]
            x = std::fmod(std::abs(x), 2.0 * M_PI);
            if (x > M_PI) x = 2.0 * M_PI - x;
            prop[static_cast<size_t>(i)] = x;
        }
        double lp = sp_log_density(prop);
        bool accept = std::log(rng.next_unit()) <= lp - logf;
        if (accept) {
            th = std::move(prop);
            logf = lp;
        }
        if (tuning) {
            step *= accept ? 1.03 : 0.98;  // equilibrium near 0.4 acceptance
        } else {
            ++proposed;
            if (accept) ++accepted;
        }
    };
    for (long i = 0; i < tune; ++i) one_step(true);
    for (long i = tune; i < burn; ++i) one_step(false);  // frozen step, measured
    for (long i = 0; i < thin; ++i) one_step(false);
    if (diag) {
        diag->acceptance_rate = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
        diag->burn_in = burn;
        diag->tuning_warning = diag->acceptance_rate < 0.1 || diag->acceptance_rate > 0.9;
    }
    std::sort(th.begin(), th.end());
    return th;
}

}  // namespace

std::vector<double> sample_symplectic_eigenangles(int k, RngStream& rng, SpSampleMethod method,
                                                  SpDiagnostics* diag) {
    if (k < 1) throw std::invalid_argument("symplectic k must be >= 1");
    if (method == SpSampleMethod::rejection) {
        if (k > 3) throw std::invalid_argument("rejection sampling permitted only for k <= 3");
        return sp_rejection(k, rng, diag);
    }
    return sp_metropolis(k, rng, diag);
}

Eigen::MatrixXcd sample_quaternion_ginibre(int N, RngStream& rng) {
    const double s = std::sqrt(quaternion_component_variance(N));
    Eigen::MatrixXcd M(2 * N, 2 * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double a = s * rng.next_gaussian();
            double b = s * rng.next_gaussian();
            double c = s * rng.next_gaussian();
            double d = s * rng.next_gaussian();
            // a sigma_0 + b sigma_1 + c sigma_2 + d sigma_3
            M(2 * i, 2 * j) = cplx(a, b);
            M(2 * i, 2 * j + 1) = cplx(c, d);
            M(2 * i + 1, 2 * j) = cplx(-c, d);
            M(2 * i + 1, 2 * j + 1) = cplx(a, -b);
        }
    return M;
}

Eigen::MatrixXcd sample_haar_symplectic_matrix(int k, RngStream& rng) {
    const int n = 2 * k;
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double a = rng.next_gaussian();
            double b = rng.next_gaussian();
            double c = rng.next_gaussian();
            double d = rng.next_gaussian();
            A(2 * i, 2 * j) = cplx(a, b);
            A(2 * i, 2 * j + 1) = cplx(c, d);
            A(2 * i + 1, 2 * j) = cplx(-c, d);
            A(2 * i + 1, 2 * j + 1) = cplx(a, -b);
        }
    // Gram-Schmidt on quaternion column pairs: the even column is the
    // quaternion partner -J conj(u) of the odd one, which unitarity plus the
    // antisymmetry of J keeps orthogonal to everything already placed.
    Eigen::MatrixXcd Q(n, n);
    auto partner = [&](const Eigen::VectorXcd& u) {
        Eigen::VectorXcd v(n);
        for (int i = 0; i < k; ++i) {
            v(2 * i) = -std::conj(u(2 * i + 1));
            v(2 * i + 1) = std::conj(u(2 * i));
        }
        return v;
    };
    for (int j = 0; j < k; ++j) {
        Eigen::VectorXcd u = A.col(2 * j);
        for (int pass = 0; pass < 2; ++pass)
            for (int c = 0; c < 2 * j; ++c) u -= Q.col(c).dot(u) * Q.col(c);
        u.normalize();
        Q.col(2 * j) = u;
        Q.col(2 * j + 1) = partner(u);
    }
    return Q;
}

Rat closed_form_schur_average(const EnsembleSpec& e, const Partition& lam) {
    const PartitionClass cls = classify(lam);
    switch (e.kind) {
        case EnsembleSpec::Kind::complex_ginibre:
            throw std::invalid_argument(
                "complex Ginibre has no stand-alone closed-form Schur average");
        case EnsembleSpec::Kind::haar_symplectic:
            return (cls.is_fat && lam.length() <= 2 * e.k) ? Rat(1) : Rat(0);
        case EnsembleSpec::Kind::haar_orthogonal:
            return (cls.is_even_parts && lam.length() <= e.N) ? Rat(1) : Rat(0);
        case EnsembleSpec::Kind::quaternion_ginibre: {
            if (!cls.is_fat || lam.length() > 2 * e.N) return Rat(0);
            Rat content = content_pochhammer(Rat(e.N + e.L), lam);
            return content * rat_pow(Rat(1, e.N), lam.weight());
        }
    }
    return Rat(0);
}

MCEstimate mc_schur_average(const EnsembleSpec& e, const Partition& lam, long S, uint64_t seed,
                            int threads) {
    if (S < 100) throw std::invalid_argument("mc_schur_average: need at least 100 samples");
    std::function<double(long)> fn;
    switch (e.kind) {
        case EnsembleSpec::Kind::complex_ginibre:
            fn = [&e, &lam, seed](long i) {
                RngStream r = RngStream::keyed(seed, static_cast<uint64_t>(i));
                return schur_of_matrix(lam, sample_complex_ginibre(e.N, r)).real();
            };
            break;
        case EnsembleSpec::Kind::haar_orthogonal:
            fn = [&e, &lam, seed](long i) {
                RngStream r = RngStream::keyed(seed, static_cast<uint64_t>(i));
                Eigen::MatrixXcd M = sample_haar_orthogonal(e.N, r).cast<cplx>();
                return schur_of_matrix(lam, M).real();
            };
            break;
        case EnsembleSpec::Kind::haar_symplectic: {
            SpSampleMethod method = e.k <= 3 ? SpSampleMethod::rejection : SpSampleMethod::metropolis;
            fn = [&e, &lam, seed, method](long i) {
                RngStream r = RngStream::keyed(seed, static_cast<uint64_t>(i));
                std::vector<double> th = sample_symplectic_eigenangles(e.k, r, method);
                std::vector<cplx> xs;
                xs.reserve(2 * th.size());
                for (double t : th) {
                    xs.emplace_back(std::cos(t), std::sin(t));
                    xs.emplace_back(std::cos(t), -std::sin(t));
                }
                return schur_from_eigenvalues(lam, xs).real();
            };
            break;
        }
        case EnsembleSpec::Kind::quaternion_ginibre:
            fn = [&e, &lam, seed](long i) {
                RngStream r = RngStream::keyed(seed, static_cast<uint64_t>(i));
                Eigen::MatrixXcd M = sample_quaternion_ginibre(e.N, r);
                cplx v = schur_of_matrix(lam, M);
                for (long l = 0; l < e.L; ++l) v *= M.determinant();
                return v.real();
            };
            break;
    }
    McResult res = mc_run(S, fn, threads);
    return MCEstimate{res.mean, res.stderr_, res.samples, seed};
}

}  // namespace fatpart
