#include <exception>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bandedge_cli/commands.hpp"

namespace cli = bandedge::cli;

int main(int argc, char** argv) {
    CLI::App app{
        "bandedge: entanglement dynamics of independent qubits near a "
        "photonic band edge"};
    app.require_subcommand(1);

    int exit_code = cli::kExitOk;

    // figure
    int figure_id = 1;
    bool figure_svg = false;
    std::string figure_out = ".";
    unsigned figure_workers = 0;
    auto* figure = app.add_subcommand(
        "figure", "Reproduce the concurrence figures as CSV (optionally SVG)");
    figure->add_option("n", figure_id, "Figure number (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    figure->add_flag("--svg", figure_svg, "Also render a line chart");
    figure->add_option("--out", figure_out, "Output directory")
        ->capture_default_str();
    figure->add_option("--workers", figure_workers,
                       "Worker threads (0 = hardware)");
    figure->callback([&] {
        exit_code = cli::cmd_figure(figure_id, figure_svg, figure_out,
                                    figure_workers);
    });

    // series
    cli::SweepSpec spec;
    std::string series_quantity = "q2";
    std::string series_out = "series.csv";
    bool series_svg = false;
    auto* series = app.add_subcommand(
        "series", "Sweep a quantity over detunings and a tau grid");
    series->add_option("--quantity", series_quantity,
                       "q2 | c_phi | c_psi | c_general | asymptotic")
        ->capture_default_str();
    series->add_option("--d", spec.d_values, "Detunings d = delta/beta")
        ->required()
        ->expected(-1);
    series->add_option("--tau-start", spec.tau_start)->capture_default_str();
    series->add_option("--tau-stop", spec.tau_stop)->capture_default_str();
    series->add_option("--tau-step", spec.tau_step)->capture_default_str();
    series->add_option("--alpha", spec.alpha, "Bell-like amplitude in [0, 1]")
        ->capture_default_str();
    series->add_option("--gamma", spec.gamma, "Relative phase (rad)")
        ->capture_default_str();
    series->add_option("--out", series_out, "Output CSV path")
        ->capture_default_str();
    series->add_option("--workers", spec.workers, "Worker threads (0 = hardware)");
    series->add_flag("--svg", series_svg, "Also render a line chart");
    series->callback([&] {
        const auto quantity = cli::parse_quantity(series_quantity);
        if (!quantity) {
            std::cerr << "series: unknown quantity '" << series_quantity << "'\n";
            exit_code = cli::kExitUsage;
            return;
        }
        spec.quantity = *quantity;
        exit_code = cli::cmd_series(spec, series_out, series_svg);
    });

    // oracle
    double oracle_d = -1.0;
    std::size_t oracle_modes = 4000;
    double oracle_emax = 10000.0;
    double oracle_tau_max = 10.0;
    std::size_t oracle_points = 101;
    std::string oracle_grid = "stretched";
    std::string oracle_out = "oracle_report.csv";
    auto* oracle = app.add_subcommand(
        "oracle",
        "Compare |q|^2 against the discretized-bath eigendecomposition");
    oracle->add_option("--d", oracle_d, "Detuning")->required();
    oracle->add_option("--n-modes", oracle_modes)->capture_default_str();
    oracle->add_option("--e-max", oracle_emax)->capture_default_str();
    oracle->add_option("--tau-max", oracle_tau_max)->capture_default_str();
    oracle->add_option("--points", oracle_points)->capture_default_str();
    oracle->add_option("--grid", oracle_grid, "stretched | uniform")
        ->capture_default_str();
    oracle->add_option("--out", oracle_out)->capture_default_str();
    oracle->callback([&] {
        exit_code = cli::cmd_oracle(oracle_d, oracle_modes, oracle_emax,
                                    oracle_tau_max, oracle_points, oracle_grid,
                                    oracle_out);
    });

    // stark-plan
    double stark_in = -5.0;
    double stark_out = 5.0;
    double stark_alpha = std::numbers::sqrt2 / 2.0;
    auto* stark = app.add_subcommand(
        "stark-plan",
        "Shift budget and trapping values for moving the transition "
        "frequency between two detunings");
    stark->add_option("--d-in", stark_in, "Detuning before the shift")
        ->required();
    stark->add_option("--d-out", stark_out, "Detuning after the shift")
        ->required();
    stark->add_option("--alpha", stark_alpha, "Bell-like amplitude")
        ->capture_default_str();
    stark->callback(
        [&] { exit_code = cli::cmd_stark_plan(stark_in, stark_out, stark_alpha); });

    // beta
    double beta_omega0 = 0.0;
    double beta_dipole = 0.0;
    auto* beta = app.add_subcommand(
        "beta", "Characteristic band-edge rate from physical parameters");
    beta->add_option("--omega0", beta_omega0,
                     "Transition frequency, angular (rad/s)")
        ->required();
    beta->add_option("--dipole", beta_dipole, "Dipole moment (C*m)")->required();
    beta->callback([&] { exit_code = cli::cmd_beta(beta_omega0, beta_dipole); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
    return exit_code;
}
