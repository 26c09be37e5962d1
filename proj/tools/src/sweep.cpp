#include "bandedge_cli/sweep.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bandedge/band_edge.hpp"
#include "bandedge/dynamics.hpp"
#include "bandedge/entanglement.hpp"

namespace bandedge::cli {
namespace {

constexpr double kDegenerateSkipWindow = 1e-3;

std::string column_label(Quantity q, double d) {
    const char* name = "";
    switch (q) {
        case Quantity::Q2: name = "q2"; break;
        case Quantity::CPhi: name = "c_phi"; break;
        case Quantity::CPsi: name = "c_psi"; break;
        case Quantity::CGeneral: name = "c_general"; break;
        case Quantity::Asymptotic: name = "asymptotic"; break;
    }
    std::ostringstream label;
    label << name << "(d=" << format_number(d) << ")";
    return label.str();
}

std::vector<double> admissible_detunings(const std::vector<double>& d_values) {
    std::vector<double> kept;
    kept.reserve(d_values.size());
    for (const double d : d_values) {
        if (std::abs(d - kDegenerateDetuning) < kDegenerateSkipWindow) {
            std::cerr << "skipping d = " << d
                      << " (within 1e-3 of the degenerate detuning "
                      << kDegenerateDetuning << ")\n";
            continue;
        }
        kept.push_back(d);
    }
    return kept;
}

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
    unsigned w = requested;
    if (w == 0) {
        w = std::thread::hardware_concurrency();
        if (w == 0) w = 1;
    }
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, jobs) on the requested number of threads.
// Results land in caller-owned slots, so scheduling never reorders output.
template <typename Job>
void parallel_for(std::size_t jobs, unsigned workers, Job&& job) {
    if (workers <= 1 || jobs <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next.fetch_add(1); i < jobs;
                     i = next.fetch_add(1)) {
                    job(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

std::vector<double> evaluate_column(Quantity quantity, double d,
                                    const std::vector<double>& taus,
                                    double alpha, double gamma) {
    const BandEdgeRoots roots = compute_roots(d);
    std::vector<double> column;
    column.reserve(taus.size());
    switch (quantity) {
        case Quantity::Q2:
            for (const double tau : taus) {
                column.push_back(std::norm(amplitude_q(roots, tau)));
            }
            break;
        case Quantity::CPhi:
            for (const double tau : taus) {
                column.push_back(concurrence_phi_closed(alpha, roots, tau));
            }
            break;
        case Quantity::CPsi:
            for (const double tau : taus) {
                column.push_back(concurrence_psi_closed(alpha, roots, tau));
            }
            break;
        case Quantity::CGeneral: {
            const TwoQubitDensityMatrix rho0 =
                build_bell_like({BellFamily::Phi, alpha, gamma});
            for (const double tau : taus) {
                column.push_back(concurrence(evolve_two_qubit(rho0, roots, tau)));
            }
            break;
        }
        case Quantity::Asymptotic:
            throw std::logic_error("evaluate_column: asymptotic has no tau grid");
    }
    return column;
}

Table asymptotic_table(const std::vector<double>& d_values, double alpha,
                       unsigned workers) {
    const std::vector<double> kept = admissible_detunings(d_values);
    std::vector<std::array<double, 3>> rows(kept.size());
    parallel_for(kept.size(), resolve_workers(workers, kept.size()),
                 [&](std::size_t i) {
                     const double d = kept[i];
                     rows[i] = {d,
                                asymptotic_concurrence(BellFamily::Phi, alpha, d),
                                asymptotic_concurrence(BellFamily::Psi, alpha, d)};
                 });
    Table table;
    table.header = {"d", "c_phi_inf", "c_psi_inf"};
    table.rows.reserve(rows.size());
    for (const auto& r : rows) {
        table.rows.push_back({r[0], r[1], r[2]});
    }
    return table;
}

}  // namespace

std::optional<Quantity> parse_quantity(const std::string& name) {
    if (name == "q2") return Quantity::Q2;
    if (name == "c_phi") return Quantity::CPhi;
    if (name == "c_psi") return Quantity::CPsi;
    if (name == "c_general") return Quantity::CGeneral;
    if (name == "asymptotic") return Quantity::Asymptotic;
    return std::nullopt;
}

std::vector<double> make_tau_grid(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
        start < 0.0 || stop < start || step <= 0.0) {
        throw std::invalid_argument("make_tau_grid: need 0 <= start <= stop, step > 0");
    }
    const auto count = static_cast<std::size_t>(
        std::floor((stop - start) / step + 1e-9));
    std::vector<double> grid;
    grid.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        grid.push_back(start + static_cast<double>(i) * step);
    }
    return grid;
}

Table run_sweep(const SweepSpec& spec) {
    if (spec.d_values.empty()) {
        throw std::invalid_argument("run_sweep: no detunings given");
    }
    if (spec.alpha < 0.0 || spec.alpha > 1.0 || !std::isfinite(spec.alpha)) {
        throw std::invalid_argument("run_sweep: alpha must lie in [0, 1]");
    }
    if (spec.quantity == Quantity::Asymptotic) {
        return asymptotic_table(spec.d_values, spec.alpha, spec.workers);
    }

    const std::vector<double> taus =
        make_tau_grid(spec.tau_start, spec.tau_stop, spec.tau_step);
    const std::vector<double> kept = admissible_detunings(spec.d_values);
    if (kept.empty()) {
        throw std::invalid_argument("run_sweep: no admissible detunings left");
    }

    std::vector<std::vector<double>> columns(kept.size());
    parallel_for(kept.size(), resolve_workers(spec.workers, kept.size()),
                 [&](std::size_t i) {
                     columns[i] = evaluate_column(spec.quantity, kept[i], taus,
                                                  spec.alpha, spec.gamma);
                 });

    Table table;
    table.header.push_back("tau");
    for (const double d : kept) {
        table.header.push_back(column_label(spec.quantity, d));
    }
    table.rows.reserve(taus.size());
    for (std::size_t r = 0; r < taus.size(); ++r) {
        std::vector<double> row;
        row.reserve(1 + columns.size());
        row.push_back(taus[r]);
        for (const auto& column : columns) {
            row.push_back(column[r]);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

StarkPlan plan_stark_shift(double d_in, double d_out, double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("plan_stark_shift: alpha must lie in [0, 1]");
    }
    StarkPlan plan;
    plan.d_in = d_in;
    plan.d_out = d_out;
    plan.alpha = alpha;
    plan.shift = d_out - d_in;
    plan.trapping_phi_in = asymptotic_concurrence(BellFamily::Phi, alpha, d_in);
    plan.trapping_psi_in = asymptotic_concurrence(BellFamily::Psi, alpha, d_in);
    plan.trapping_phi_out = asymptotic_concurrence(BellFamily::Phi, alpha, d_out);
    plan.trapping_psi_out = asymptotic_concurrence(BellFamily::Psi, alpha, d_out);
    if (alpha > 0.0 && alpha < 1.0) {
        plan.psi_death_threshold = esd_threshold(BellFamily::Psi, alpha);
    }
    if (plan.psi_death_threshold) {
        plan.esd_risk_at_out =
            steady_amplitude_sq(d_out) <= *plan.psi_death_threshold;
    }
    return plan;
}

std::string format_stark_plan(const StarkPlan& plan) {
    const auto region = [](double d) {
        if (d < 0.0) return "inside the gap";
        if (d > 0.0) return "outside the gap";
        return "at the band edge";
    };
    std::ostringstream out;
    out << "stark-shift plan (alpha = " << format_number(plan.alpha) << ")\n";
    out << "  d_in  = " << format_number(plan.d_in) << "  (" << region(plan.d_in)
        << ")\n";
    out << "  d_out = " << format_number(plan.d_out) << "  ("
        << region(plan.d_out) << ")\n";
    out << "  required shift Delta/beta = " << format_number(plan.shift) << "\n";
    out << "  trapping at d_in : C_phi(inf) = "
        << format_number(plan.trapping_phi_in)
        << ", C_psi(inf) = " << format_number(plan.trapping_psi_in) << "\n";
    out << "  trapping at d_out: C_phi(inf) = "
        << format_number(plan.trapping_phi_out)
        << ", C_psi(inf) = " << format_number(plan.trapping_psi_out) << "\n";
    if (plan.psi_death_threshold) {
        out << "  Psi-family death threshold: |q|^2 <= "
            << format_number(*plan.psi_death_threshold) << "\n";
        out << "  ESD risk at d_out: "
            << (plan.esd_risk_at_out ? "yes (steady population below threshold)"
                                     : "no")
            << "\n";
    } else {
        out << "  Psi-family death threshold: none for this alpha\n";
        out << "  ESD risk at d_out: no finite-population death\n";
    }
    return out.str();
}

}  // namespace bandedge::cli
