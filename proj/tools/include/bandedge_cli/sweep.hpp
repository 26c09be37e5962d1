#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bandedge_cli/csv.hpp"

namespace bandedge::cli {

enum class Quantity { Q2, CPhi, CPsi, CGeneral, Asymptotic };

std::optional<Quantity> parse_quantity(const std::string& name);

struct SweepSpec {
    Quantity quantity = Quantity::Q2;
    std::vector<double> d_values;
    double tau_start = 0.0;
    double tau_stop = 10.0;
    double tau_step = 0.01;
    double alpha = std::numbers::sqrt2 / 2.0;
    double gamma = 0.0;
    unsigned workers = 0;  // 0 = pick from hardware
};

std::vector<double> make_tau_grid(double start, double stop, double step);

// Fans out over d values, one column per admissible detuning (grid points
// within 1e-3 of the degenerate detuning are skipped and logged to
// stderr), rows over the tau grid. CGeneral runs the Wootters concurrence
// on the evolved Phi-family state, so its column can be diffed against
// CPhi directly. Asymptotic ignores the tau grid and produces
// (d, c_phi_inf, c_psi_inf) rows instead. Output is byte-stable across
// worker counts.
Table run_sweep(const SweepSpec& spec);

struct StarkPlan {
    double d_in = 0.0;
    double d_out = 0.0;
    double alpha = 0.0;
    double shift = 0.0;  // Delta/beta needed to move d_in -> d_out
    double trapping_phi_in = 0.0;
    double trapping_psi_in = 0.0;
    double trapping_phi_out = 0.0;
    double trapping_psi_out = 0.0;
    std::optional<double> psi_death_threshold;  // in |q|^2, if one exists
    bool esd_risk_at_out = false;  // steady |q_s|^2 at d_out under the threshold
};

StarkPlan plan_stark_shift(double d_in, double d_out, double alpha);

std::string format_stark_plan(const StarkPlan& plan);

}  // namespace bandedge::cli
