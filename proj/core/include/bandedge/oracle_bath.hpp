#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bandedge/complex_special.hpp"

namespace bandedge {

// Brute-force check of the band-edge amplitude: discretize the reservoir
// above the edge, diagonalize the single-excitation Hamiltonian exactly,
// and compare |c_a(tau)|^2 against |q(tau)|^2 from the closed form. The
// two computations share nothing but the model, so this side adjudicates
// branch choices in the analytic one.

enum class BathGrid {
    // Modes at eps_j = (j - 1/2) * de with couplings g_j^2 = de/(pi sqrt(eps_j)).
    UniformMidpoint,
    // Modes at eps_j = u_j^2, u_j = (j - 1/2) * du, with g_j^2 = 2 du/pi.
    // Regularizes the inverse-square-root edge singularity; converges in
    // n_modes orders of magnitude faster than the uniform grid and
    // decouples the cutoff from the mode count.
    SqrtStretched,
};

struct BathDiscretization {
    double d = 0.0;
    std::size_t n_modes = 0;
    double e_max = 0.0;                // cutoff above the edge, units of beta
    BathGrid grid = BathGrid::UniformMidpoint;
    std::vector<double> epsilon;       // mode frequencies, >= 0
    std::vector<double> coupling_sq;   // g_j^2, units of beta
};

// Builds the mode grid. Throws InsufficientBathError for n_modes < 100 or
// e_max < max(10, 4|d|). Total spectral weight is (2/pi) sqrt(e_max) up
// to the grid's edge correction.
BathDiscretization discretize_bath(double d, std::size_t n_modes, double e_max,
                                   BathGrid grid = BathGrid::UniformMidpoint);

// Eigendecomposition of the (n+1) x (n+1) single-excitation Hamiltonian:
// atom level at 0, mode j at (eps_j - d), atom-mode element i g_j. A
// diagonal phase change of the mode basis turns the i g_j couplings into
// real g_j without touching the atom-atom element of exp(-i H tau), so
// the solve runs on the real symmetric form. Decompose once, evaluate at
// any number of times.
class BathEigensystem {
public:
    explicit BathEigensystem(const BathDiscretization& bath);

    // c_a(tau): the (atom, atom) element of exp(-i H tau).
    Complex amplitude(double tau) const;

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

    // |<atom|m>|^2 per eigenvector; sums to 1 for a unitary decomposition.
    const Eigen::VectorXd& atom_weights() const { return atom_weights_; }

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::VectorXd atom_weights_;
};

// One-shot convenience wrapper around BathEigensystem.
Complex oracle_amplitude(const BathDiscretization& bath, double tau);

struct OracleComparison {
    double d = 0.0;
    std::size_t n_modes = 0;
    double e_max = 0.0;
    BathGrid grid = BathGrid::UniformMidpoint;
    double tolerance = 0.0;
    std::vector<double> tau;
    std::vector<double> q2_analytic;
    std::vector<double> q2_bath;
    std::vector<double> abs_diff;
    double max_abs_diff = 0.0;
    bool pass = false;
    std::string note;  // calibration note, plus failure attribution if any
};

// Runs the comparison on a tau grid. Accepts under-resolved baths (the
// deliberate failure path); the report then attributes the deviation to
// the cutoff or to the mode count.
OracleComparison compare_to_analytic(double d, std::span<const double> tau_grid,
                                     std::size_t n_modes, double e_max,
                                     BathGrid grid = BathGrid::SqrtStretched,
                                     double tolerance = 5e-3);

}  // namespace bandedge
