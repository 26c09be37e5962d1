#pragma once

#include <optional>

#include "bandedge/dynamics.hpp"

namespace bandedge {

// Wootters concurrence of an arbitrary two-qubit density matrix:
// C = max{0, l1 - l2 - l3 - l4} with l_i the descending square roots of
// the eigenvalues of rho * (sy x sy) rho^* (sy x sy). Computed by
// factoring rho = Psi Psi^dagger (eigenvalues below 1e-14 are treated as
// exact rank deficiency, anything below -1e-8 is an error) and taking
// the singular values of Psi^T (sy x sy) Psi, which keeps the lambdas
// accurate near zero.
double concurrence(const TwoQubitDensityMatrix& rho);

// Closed-form concurrence of an evolved Phi-family state,
//   C = 2 max{0, alpha sqrt(1-alpha^2) |q|^2},
// independent of the relative phase gamma.
double concurrence_phi_closed(double alpha, double d, double tau);
double concurrence_phi_closed(double alpha, const BandEdgeRoots& roots, double tau);

// Closed-form concurrence of an evolved Psi-family state,
//   C = 2 max{0, sqrt(1-alpha^2) |q|^2 [alpha - sqrt(1-alpha^2)(1 - |q|^2)]}.
// For alpha = 1/sqrt(2) this reduces to |q|^4.
double concurrence_psi_closed(double alpha, double d, double tau);
double concurrence_psi_closed(double alpha, const BandEdgeRoots& roots, double tau);

// Long-time concurrence, i.e. the closed forms evaluated at
// |q|^2 = steady_amplitude_sq(d). For Bell states (alpha = 1/sqrt(2)):
// C_Phi(inf) = |q_s|^2 and C_Psi(inf) = |q_s|^4 = C_Phi(inf)^2.
double asymptotic_concurrence(BellFamily family, double alpha, double d);

// Population threshold below which the Psi-family concurrence is exactly
// zero: |q|^2 <= 1 - alpha/sqrt(1-alpha^2), provided alpha < sqrt(1-alpha^2).
// Returns nullopt when the state never dies at positive |q|^2 (all Phi
// states, and Psi states with alpha >= sqrt(1-alpha^2)). Reported in
// |q|^2 rather than time: the time of death depends on the non-monotone
// |q(tau)| profile.
//
// Throws DegenerateStateError for alpha in {0, 1}.
std::optional<double> esd_threshold(BellFamily family, double alpha);

}  // namespace bandedge
