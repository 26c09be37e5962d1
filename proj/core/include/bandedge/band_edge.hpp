#pragma once

#include <array>
#include <span>
#include <vector>

#include "bandedge/complex_special.hpp"

namespace bandedge {

// Everything here works in dimensionless units: detunings d = delta/beta
// relative to the band edge (d < 0 means the transition lies inside the
// gap) and times tau = beta*t, where beta is the characteristic rate of
// the edge. Physical units enter only through beta_from_physical().

namespace constants {
inline constexpr double kSpeedOfLight = 299792458.0;            // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kReducedPlanck = 1.054571817e-34;       // J*s
}  // namespace constants

// Detuning at which two roots of the characteristic cubic merge and the
// residues blow up: d* = -3 * 4^(-1/3).
inline constexpr double kDegenerateDetuning = -1.8898815748423098;

// Half-width of the exclusion window around kDegenerateDetuning.
inline constexpr double kDegenerateWindow = 1e-6;

// Largest |d| accepted by compute_roots.
inline constexpr double kMaxDetuning = 100.0;

// Roots and residues of the characteristic cubic behind the band-edge
// amplitude. x_j = y_j * exp(i pi/4) where y_j solve y^3 + d*y - 1 = 0;
// x[0] is always the non-decaying (bound-state) branch, with y_1 real and
// positive. a_plus and a_minus are the Cardano cube-root pair, coupled so
// that a_plus * a_minus = -d/3:
//
//   a_plus^3 + a_minus^3 = 1,    a_plus^3 * a_minus^3 = -d^3/27,
//   x_1 = (a_plus + a_minus) e^{i pi/4},
//   a_j = x_j / [(x_j - x_i)(x_j - x_k)].
struct BandEdgeRoots {
    Complex a_plus;
    Complex a_minus;
    std::array<Complex, 3> x;
    std::array<Complex, 3> a;
    double d = 0.0;
};

// Computes the roots for a dimensionless detuning d.
//
// Throws std::invalid_argument for non-finite d or |d| > kMaxDetuning,
// DegenerateDetuningError within kDegenerateWindow of the degenerate
// point, and RootConditioningError if any two roots come closer than
// 1e-6.
BandEdgeRoots compute_roots(double d);

// Excited-state amplitude q(tau). q(0) = 1 and |q| <= 1 for every
// admissible detuning. Exponential-times-erfc products are evaluated in
// scaled form, so there is no intermediate overflow at any tau.
Complex amplitude_q(const BandEdgeRoots& roots, double tau);
Complex amplitude_q(double d, double tau);

// Amplitude sampled on a monotone non-negative grid; roots are computed
// once and shared across the grid.
struct AmplitudeSeries {
    double d = 0.0;
    std::vector<double> tau;
    std::vector<Complex> q;
};

AmplitudeSeries amplitude_series(double d, std::span<const double> tau_grid);

// Long-time limit of |q|^2: 4 |a_1 x_1|^2 on the non-decaying branch
// (Re(x_1^2) >= -1e-9), zero otherwise. Clamped to [0, 1].
double steady_amplitude_sq(const BandEdgeRoots& roots);
double steady_amplitude_sq(double d);

// Transition frequency (angular, rad/s) and electric dipole moment (C*m).
struct PhysicalParams {
    double omega0 = 0.0;
    double dipole = 0.0;
};

// Characteristic band-edge rate in s^-1:
//   beta = [omega0^(7/2) * dipole^2 / (6 pi eps0 hbar c^3)]^(2/3).
//
// omega0 is an angular frequency. A transition quoted as "50 GHz" enters
// as 2*pi*50e9 rad/s; that convention reproduces the ~10 kHz scale
// expected for Rydberg atoms in a GHz-range gap.
double beta_from_physical(const PhysicalParams& params);

// P(tau) = p0 * |q(d, tau)|^2 for an initial excited population p0.
double excited_population(double p0, double d, double tau);

}  // namespace bandedge
