#include "bandedge/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "bandedge/errors.hpp"

namespace bandedge {
namespace {

// (sigma_y x sigma_y) in the ordered basis: antidiagonal (-1, 1, 1, -1).
TwoQubitDensityMatrix spin_flip_kernel() {
    TwoQubitDensityMatrix yy = TwoQubitDensityMatrix::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy;
}

// Eigenvalues of rho below this floor count as exact zeros when factoring
// rho = Psi Psi^dagger. Without the hard zero, sqrt(eigensolver noise)
// ~ 1e-8 leaks into the singular values of the tau matrix and the
// closed-form comparisons cannot reach 1e-9.
constexpr double kRankFloor = 1e-14;

double amplitude_sq(const BandEdgeRoots& roots, double tau) {
    return std::norm(amplitude_q(roots, tau));
}

void require_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("concurrence: alpha must lie in [0, 1]");
    }
}

double phi_closed_from_q2(double alpha, double q2) {
    const double beta_amp = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    return 2.0 * std::max(0.0, alpha * beta_amp * q2);
}

double psi_closed_from_q2(double alpha, double q2) {
    const double beta_amp = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    return 2.0 * std::max(0.0, beta_amp * q2 * (alpha - beta_amp * (1.0 - q2)));
}

}  // namespace

double concurrence(const TwoQubitDensityMatrix& rho) {
    if (!is_valid_density_matrix(rho)) {
        throw InvalidStateError("concurrence: input is not a density matrix");
    }
    // Factor rho = Psi Psi^dagger. The Wootters lambdas are then the
    // singular values of the complex-symmetric matrix
    // B = Psi^T (sy x sy) Psi: the nonzero eigenvalues of rho rho~ equal
    // the eigenvalues of B^dagger B. Singular values carry no square-root
    // amplification of eigensolver noise near zero, which the product
    // form sqrt(rho) rho~ sqrt(rho) cannot avoid.
    const TwoQubitDensityMatrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<TwoQubitDensityMatrix> solver(herm);
    Eigen::Vector4d vals = solver.eigenvalues();
    for (int i = 0; i < 4; ++i) {
        if (vals(i) < -1e-8) {
            throw InvalidStateError(
                "concurrence: eigenvalue below the positivity tolerance");
        }
        vals(i) = vals(i) < kRankFloor ? 0.0 : std::sqrt(vals(i));
    }
    const TwoQubitDensityMatrix psi =
        solver.eigenvectors() * vals.asDiagonal();
    const TwoQubitDensityMatrix tau_matrix =
        psi.transpose() * spin_flip_kernel() * psi;
    const Eigen::JacobiSVD<TwoQubitDensityMatrix> svd(tau_matrix);
    const Eigen::Vector4d sigma = svd.singularValues();  // descending
    const double c = sigma(0) - sigma(1) - sigma(2) - sigma(3);
    return std::clamp(c, 0.0, 1.0);
}

double concurrence_phi_closed(double alpha, const BandEdgeRoots& roots,
                              double tau) {
    require_alpha(alpha);
    return phi_closed_from_q2(alpha, amplitude_sq(roots, tau));
}

double concurrence_phi_closed(double alpha, double d, double tau) {
    return concurrence_phi_closed(alpha, compute_roots(d), tau);
}

double concurrence_psi_closed(double alpha, const BandEdgeRoots& roots,
                              double tau) {
    require_alpha(alpha);
    return psi_closed_from_q2(alpha, amplitude_sq(roots, tau));
}

double concurrence_psi_closed(double alpha, double d, double tau) {
    return concurrence_psi_closed(alpha, compute_roots(d), tau);
}

double asymptotic_concurrence(BellFamily family, double alpha, double d) {
    require_alpha(alpha);
    const double qs2 = steady_amplitude_sq(d);
    return family == BellFamily::Phi ? phi_closed_from_q2(alpha, qs2)
                                     : psi_closed_from_q2(alpha, qs2);
}

std::optional<double> esd_threshold(BellFamily family, double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0) {
        throw DegenerateStateError(
            "esd_threshold: alpha in {0, 1} is separable; no threshold");
    }
    if (family == BellFamily::Phi) {
        return std::nullopt;  // C_Phi > 0 for every positive |q|^2
    }
    const double beta_amp = std::sqrt(1.0 - alpha * alpha);
    if (alpha >= beta_amp) {
        return std::nullopt;  // bracket positive on all of (0, 1]
    }
    return 1.0 - alpha / beta_amp;
}

}  // namespace bandedge
