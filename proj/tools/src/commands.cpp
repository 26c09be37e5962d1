#include "bandedge_cli/commands.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "bandedge/band_edge.hpp"
#include "bandedge/oracle_bath.hpp"
#include "bandedge_cli/svg.hpp"

namespace bandedge::cli {
namespace {

std::vector<double> figure3_grid() {
    std::vector<double> grid;
    grid.reserve(401);
    for (int i = 0; i <= 400; ++i) {
        grid.push_back(-10.0 + 0.05 * static_cast<double>(i));
    }
    return grid;
}

void emit(const Table& table, const std::string& csv_path, bool with_svg,
          const std::string& title) {
    write_text_file(csv_path, to_csv(table));
    std::cout << "wrote " << csv_path << "\n";
    if (with_svg) {
        std::filesystem::path svg_path(csv_path);
        svg_path.replace_extension(".svg");
        write_text_file(svg_path.string(), to_svg(table, title));
        std::cout << "wrote " << svg_path.string() << "\n";
    }
}

}  // namespace

int cmd_figure(int which, bool with_svg, const std::string& out_dir,
               unsigned workers) {
    if (which < 1 || which > 3) {
        std::cerr << "figure: expected 1, 2 or 3\n";
        return kExitUsage;
    }
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    SweepSpec spec;
    spec.workers = workers;
    if (which == 3) {
        spec.quantity = Quantity::Asymptotic;
        spec.d_values = figure3_grid();
        const Table table = run_sweep(spec);
        emit(table, (dir / "figure3.csv").string(), with_svg,
             "asymptotic concurrence vs d");
        return kExitOk;
    }

    spec.quantity = which == 1 ? Quantity::CPhi : Quantity::CPsi;
    spec.d_values = {-10.0, -4.0, -1.0, 0.0, 1.0, 10.0};
    spec.tau_start = 0.0;
    spec.tau_stop = 10.0;
    spec.tau_step = 0.01;
    const Table table = run_sweep(spec);
    const std::string name = which == 1 ? "figure1" : "figure2";
    const std::string title = which == 1 ? "C_phi(tau), Bell Phi state"
                                         : "C_psi(tau), Bell Psi state";
    emit(table, (dir / (name + ".csv")).string(), with_svg, title);
    return kExitOk;
}

int cmd_series(const SweepSpec& spec, const std::string& out_path,
               bool with_svg) {
    const Table table = run_sweep(spec);
    emit(table, out_path, with_svg, "bandedge series");
    return kExitOk;
}

int cmd_oracle(double d, std::size_t n_modes, double e_max, double tau_max,
               std::size_t points, const std::string& grid_name,
               const std::string& out_path) {
    BathGrid grid;
    if (grid_name == "stretched") {
        grid = BathGrid::SqrtStretched;
    } else if (grid_name == "uniform") {
        grid = BathGrid::UniformMidpoint;
    } else {
        std::cerr << "oracle: --grid must be 'stretched' or 'uniform'\n";
        return kExitUsage;
    }
    if (points < 2 || tau_max <= 0.0) {
        std::cerr << "oracle: need at least 2 points and tau-max > 0\n";
        return kExitUsage;
    }

    std::vector<double> taus;
    taus.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        taus.push_back(tau_max * static_cast<double>(i) /
                       static_cast<double>(points - 1));
    }

    const OracleComparison report =
        compare_to_analytic(d, taus, n_modes, e_max, grid);

    Table table;
    table.header = {"tau", "q2_analytic", "q2_bath", "abs_diff"};
    for (std::size_t i = 0; i < report.tau.size(); ++i) {
        table.rows.push_back({report.tau[i], report.q2_analytic[i],
                              report.q2_bath[i], report.abs_diff[i]});
    }
    std::string csv = "# " + report.note + "\n" + to_csv(table);
    write_text_file(out_path, csv);

    std::cout << "oracle comparison: d = " << format_number(d)
              << ", n_modes = " << n_modes
              << ", e_max = " << format_number(e_max) << ", grid = " << grid_name
              << "\n";
    std::cout << "max | |q|^2 - |c_a|^2 | = " << format_number(report.max_abs_diff)
              << "  (tolerance " << format_number(report.tolerance) << ")\n";
    std::cout << "note: " << report.note << "\n";
    std::cout << "wrote " << out_path << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? kExitOk : kExitOracleFail;
}

int cmd_stark_plan(double d_in, double d_out, double alpha) {
    const StarkPlan plan = plan_stark_shift(d_in, d_out, alpha);
    std::cout << format_stark_plan(plan);
    return kExitOk;
}

int cmd_beta(double omega0, double dipole) {
    const double beta = beta_from_physical({omega0, dipole});
    std::cout << "beta = " << format_number(beta) << " s^-1  ("
              << format_number(beta / 1e3) << " kHz)\n";
    std::cout << "note: --omega0 is an angular frequency in rad/s. A "
                 "transition quoted as f = 50 GHz enters as 2*pi*f = "
                 "3.14159e11 rad/s; the ordinary-frequency reading would "
                 "give a beta about 70x smaller.\n";
    return kExitOk;
}

}  // namespace bandedge::cli
