#include "bandedge/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "bandedge/errors.hpp"

namespace bandedge {
namespace {

template <typename Matrix>
DensityMatrixDiagnostics diagnostics_of(const Matrix& rho) {
    DensityMatrixDiagnostics diag;
    diag.hermiticity_residual =
        (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    diag.trace_residual = std::abs(rho.trace() - std::complex<double>(1.0, 0.0));
    const Matrix herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm,
                                                 Eigen::EigenvaluesOnly);
    diag.min_eigenvalue = solver.eigenvalues().minCoeff();
    return diag;
}

template <typename Matrix>
bool passes(const Matrix& rho, double tol) {
    const auto diag = diagnostics_of(rho);
    return diag.hermiticity_residual < tol && diag.trace_residual < tol &&
           diag.min_eigenvalue > -tol;
}

}  // namespace

DensityMatrixDiagnostics validate_density_matrix(const TwoQubitDensityMatrix& rho) {
    return diagnostics_of(rho);
}

bool is_valid_density_matrix(const TwoQubitDensityMatrix& rho, double tol) {
    return passes(rho, tol);
}

bool is_valid_single_qubit_state(const SingleQubitState& rho, double tol) {
    return passes(rho, tol);
}

SingleQubitState evolve_single_qubit(const SingleQubitState& rho0,
                                     const BandEdgeRoots& roots, double tau) {
    if (!is_valid_single_qubit_state(rho0)) {
        throw InvalidStateError("evolve_single_qubit: input is not a density matrix");
    }
    const Complex q = amplitude_q(roots, tau);
    const double q2 = std::norm(q);
    const double p1 = rho0(0, 0).real();

    SingleQubitState rho;
    rho(0, 0) = p1 * q2;
    rho(0, 1) = rho0(0, 1) * q;
    rho(1, 0) = std::conj(rho(0, 1));
    rho(1, 1) = rho0(1, 1).real() + p1 * (1.0 - q2);
    return rho;
}

SingleQubitState evolve_single_qubit(const SingleQubitState& rho0, double d,
                                     double tau) {
    return evolve_single_qubit(rho0, compute_roots(d), tau);
}

TwoQubitDensityMatrix build_bell_like(const BellLikeState& state) {
    if (!std::isfinite(state.alpha) || state.alpha < 0.0 || state.alpha > 1.0) {
        throw std::invalid_argument("build_bell_like: alpha must lie in [0, 1]");
    }
    if (!std::isfinite(state.gamma)) {
        throw std::invalid_argument("build_bell_like: gamma must be finite");
    }
    const double beta_amp = std::sqrt(std::max(0.0, 1.0 - state.alpha * state.alpha));
    const Complex phase = std::polar(beta_amp, state.gamma);

    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    if (state.family == BellFamily::Phi) {
        psi(2) = state.alpha;  // |01>
        psi(1) = phase;        // |10>
    } else {
        psi(3) = state.alpha;  // |00>
        psi(0) = phase;        // |11>
    }
    return psi * psi.adjoint();
}

TwoQubitDensityMatrix evolve_two_qubit(const TwoQubitDensityMatrix& rho0,
                                       const BandEdgeRoots& roots, double tau) {
    if (!is_valid_density_matrix(rho0)) {
        throw InvalidStateError("evolve_two_qubit: input is not a density matrix");
    }
    const Complex q = amplitude_q(roots, tau);
    const double q2 = std::norm(q);
    const double loss = 1.0 - q2;
    const double p11 = rho0(0, 0).real();

    TwoQubitDensityMatrix rho;
    rho(0, 0) = p11 * q2 * q2;
    rho(1, 1) = p11 * q2 * loss + rho0(1, 1).real() * q2;
    rho(2, 2) = p11 * q2 * loss + rho0(2, 2).real() * q2;
    rho(3, 3) = 1.0 - (rho(0, 0).real() + rho(1, 1).real() + rho(2, 2).real());

    rho(0, 1) = rho0(0, 1) * q * q2;
    rho(0, 2) = rho0(0, 2) * q * q2;
    rho(0, 3) = rho0(0, 3) * q * q;
    rho(1, 2) = rho0(1, 2) * q2;
    rho(1, 3) = rho0(0, 2) * q * loss + rho0(1, 3) * q;
    rho(2, 3) = rho0(0, 1) * q * loss + rho0(2, 3) * q;

    rho(1, 0) = std::conj(rho(0, 1));
    rho(2, 0) = std::conj(rho(0, 2));
    rho(3, 0) = std::conj(rho(0, 3));
    rho(2, 1) = std::conj(rho(1, 2));
    rho(3, 1) = std::conj(rho(1, 3));
    rho(3, 2) = std::conj(rho(2, 3));
    return rho;
}

TwoQubitDensityMatrix evolve_two_qubit(const TwoQubitDensityMatrix& rho0,
                                       double d, double tau) {
    return evolve_two_qubit(rho0, compute_roots(d), tau);
}

}  // namespace bandedge
