#pragma once

#include <Eigen/Dense>

#include "bandedge/band_edge.hpp"

namespace bandedge {

// Single-qubit states live in the basis {|1> (excited), |0> (ground)};
// two-qubit states in the ordered product basis
//   |1> = |11>, |2> = |10>, |3> = |01>, |4> = |00>,
// which every map and file format in this project uses unchanged.
using SingleQubitState = Eigen::Matrix2cd;
using TwoQubitDensityMatrix = Eigen::Matrix4cd;

enum class BellFamily { Phi, Psi };

// One-parameter family of partially entangled pure states:
//   Phi: alpha |01> + e^{i gamma} sqrt(1 - alpha^2) |10>
//   Psi: alpha |00> + e^{i gamma} sqrt(1 - alpha^2) |11>
struct BellLikeState {
    BellFamily family = BellFamily::Phi;
    double alpha = std::numbers::sqrt2 / 2.0;
    double gamma = 0.0;
};

struct DensityMatrixDiagnostics {
    double hermiticity_residual = 0.0;  // max entry of |rho - rho^dagger|
    double trace_residual = 0.0;        // |tr(rho) - 1|
    double min_eigenvalue = 0.0;        // smallest eigenvalue of (rho + rho^dagger)/2
};

// Hermiticity / trace / positivity report for an arbitrary 4x4 matrix.
DensityMatrixDiagnostics validate_density_matrix(const TwoQubitDensityMatrix& rho);

// Inputs are accepted as density matrices when residuals stay within
// 1e-8; anything worse is rejected, not repaired.
bool is_valid_density_matrix(const TwoQubitDensityMatrix& rho, double tol = 1e-8);
bool is_valid_single_qubit_state(const SingleQubitState& rho, double tol = 1e-8);

// Exact single-qubit decay map: the excited population scales by |q|^2,
// the coherence by q, and the ground level absorbs the rest.
SingleQubitState evolve_single_qubit(const SingleQubitState& rho0, double d,
                                     double tau);
SingleQubitState evolve_single_qubit(const SingleQubitState& rho0,
                                     const BandEdgeRoots& roots, double tau);

// Projector onto a Bell-like state. Throws std::invalid_argument for
// alpha outside [0, 1].
TwoQubitDensityMatrix build_bell_like(const BellLikeState& state);

// Two-qubit map for independent qubits in identical reservoirs, driven by
// the same q(tau). rho_44 is computed as one minus the other diagonals,
// so the trace is preserved exactly.
TwoQubitDensityMatrix evolve_two_qubit(const TwoQubitDensityMatrix& rho0,
                                       double d, double tau);
TwoQubitDensityMatrix evolve_two_qubit(const TwoQubitDensityMatrix& rho0,
                                       const BandEdgeRoots& roots, double tau);

}  // namespace bandedge
