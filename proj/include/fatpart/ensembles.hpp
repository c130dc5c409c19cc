#pragma once

#include "fatpart/numeric.hpp"
#include "fatpart/partition.hpp"
#include "fatpart/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fatpart {

struct EnsembleSpec {
    enum class Kind { complex_ginibre, haar_orthogonal, haar_symplectic, quaternion_ginibre };
    Kind kind = Kind::complex_ginibre;
    int N = 1;   // gin/orth matrix order; qgin quaternion order (matrix is 2N x 2N)
    int k = 1;   // symplectic: matrices are 2k x 2k
    long L = 0;  // qgin det exponent

    // "gin:N=2" | "sp:k=2" | "orth:N=3" | "qgin:N=2,L=1"
    static EnsembleSpec parse(const std::string& s);
    std::string to_string() const;
    int matrix_order() const;

    friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

struct MCEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
    uint64_t seed = 0;
};

// entries are independent complex Gaussians with E|Z_ab|^2 = 1/N
Eigen::MatrixXcd sample_complex_ginibre(int N, RngStream& rng);

// Haar over the full group O(N) (QR of a real Gaussian, diagonal sign fix)
Eigen::MatrixXd sample_haar_orthogonal(int N, RngStream& rng);

enum class SpSampleMethod { rejection, metropolis };

struct SpDiagnostics {
    double acceptance_rate = 0.0;
    long burn_in = 0;
    bool tuning_warning = false;
};

// One draw of k eigenangles in [0,pi] with density
// prod_{i<j} (cos t_i - cos t_j)^2 prod_i sin^2 t_i. The matrix spectrum is
// {e^{+-i t_j}}. Rejection sampling is only permitted for k <= 3; the
// Metropolis path runs a fresh seeded chain per draw (burn-in 1000, thinning
// 10, step adapted toward ~0.4 acceptance during burn-in then frozen).
std::vector<double> sample_symplectic_eigenangles(int k, RngStream& rng,
                                                  SpSampleMethod method = SpSampleMethod::rejection,
                                                  SpDiagnostics* diag = nullptr);

// Component variance of the quaternion Gaussian entries. Calibrated so that
// E[s_(1,1)(M)] = (N-1)/N, the closed-form value at L = 0; the Wick value of
// the left side is 4 N sigma^2.
inline double quaternion_component_variance(int N) {
    return static_cast<double>(N - 1) / (4.0 * static_cast<double>(N) * static_cast<double>(N));
}

// 2N x 2N complex realization of an N x N matrix of independent real
// quaternion Gaussian entries.
Eigen::MatrixXcd sample_quaternion_ginibre(int N, RngStream& rng);

// Haar on the compact symplectic group Sp(2k) = U(2k) ∩ Sp(2k,C), built by
// Gram-Schmidt over the quaternions. Used where a full matrix (not just the
// spectrum) enters an integrand.
Eigen::MatrixXcd sample_haar_symplectic_matrix(int k, RngStream& rng);

// rho_1 (symplectic), rho_2 (quaternion Ginibre), rho_3 (orthogonal); the
// complex Ginibre kind has no stand-alone closed form and is rejected.
Rat closed_form_schur_average(const EnsembleSpec& e, const Partition& lam);

// Mean of s_lambda(M) (times det(M)^L for the quaternion kind) over S draws.
MCEstimate mc_schur_average(const EnsembleSpec& e, const Partition& lam, long S, uint64_t seed,
                            int threads = 0);

}  // namespace fatpart
