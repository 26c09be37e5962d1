#pragma once

#include <cstddef>
#include <string>

#include "bandedge_cli/sweep.hpp"

namespace bandedge::cli {

// Exit codes shared by every subcommand: 0 success (and oracle PASS),
// 1 validation error, 2 oracle FAIL.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitOracleFail = 2;

// figure 1: C_phi(tau) for the Bell Phi state, d in {-10,-4,-1,0,1,10}.
// figure 2: same detunings, C_psi(tau) for the Bell Psi state.
// figure 3: asymptotic concurrences over d in [-10, 10], step 0.05.
int cmd_figure(int which, bool with_svg, const std::string& out_dir,
               unsigned workers);

int cmd_series(const SweepSpec& spec, const std::string& out_path,
               bool with_svg);

int cmd_oracle(double d, std::size_t n_modes, double e_max, double tau_max,
               std::size_t points, const std::string& grid_name,
               const std::string& out_path);

int cmd_stark_plan(double d_in, double d_out, double alpha);

int cmd_beta(double omega0, double dipole);

}  // namespace bandedge::cli
