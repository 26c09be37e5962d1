#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bandedge/band_edge.hpp"
#include "bandedge_cli/commands.hpp"
#include "bandedge_cli/csv.hpp"
#include "bandedge_cli/svg.hpp"
#include "bandedge_cli/sweep.hpp"

using bandedge::cli::format_number;
using bandedge::cli::make_tau_grid;
using bandedge::cli::parse_quantity;
using bandedge::cli::plan_stark_shift;
using bandedge::cli::Quantity;
using bandedge::cli::run_sweep;
using bandedge::cli::SweepSpec;
using bandedge::cli::Table;
using bandedge::cli::to_csv;
using bandedge::cli::to_svg;

namespace {
const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

std::vector<double> figure3_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 400; ++i) grid.push_back(-10.0 + 0.05 * i);
    return grid;
}
}  // namespace

TEST_CASE("csv: number formatting and layout") {
    CHECK(format_number(0.05) == "0.05");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(1e-12) == "1e-12");

    Table table;
    table.header = {"tau", "value"};
    table.rows = {{0.0, 1.0}, {0.5, 0.25}};
    CHECK(to_csv(table) == "tau,value\n0,1\n0.5,0.25\n");
}

TEST_CASE("make_tau_grid") {
    const auto grid = make_tau_grid(0.0, 5.0, 1.0);
    REQUIRE(grid.size() == 6);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 5.0);

    const auto fine = make_tau_grid(0.0, 10.0, 0.01);
    CHECK(fine.size() == 1001);
    CHECK(fine.back() == doctest::Approx(10.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)make_tau_grid(1.0, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS((void)make_tau_grid(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("parse_quantity") {
    CHECK(parse_quantity("q2") == Quantity::Q2);
    CHECK(parse_quantity("c_phi") == Quantity::CPhi);
    CHECK(parse_quantity("c_psi") == Quantity::CPsi);
    CHECK(parse_quantity("c_general") == Quantity::CGeneral);
    CHECK(parse_quantity("asymptotic") == Quantity::Asymptotic);
    CHECK_FALSE(parse_quantity("nope").has_value());
}

TEST_CASE("run_sweep: q2 starts at one and stays bounded") {
    SweepSpec spec;
    spec.quantity = Quantity::Q2;
    spec.d_values = {0.0};
    spec.tau_stop = 5.0;
    spec.tau_step = 0.05;
    const Table table = run_sweep(spec);
    REQUIRE(table.header.size() == 2);
    CHECK(table.rows.front()[1] == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& row : table.rows) {
        CHECK(row[1] <= 1.0 + 1e-9);
        CHECK(row[1] >= 0.0);
    }
}

TEST_CASE("run_sweep: byte-identical output across worker counts") {
    SweepSpec spec;
    spec.quantity = Quantity::CPhi;
    spec.d_values = {-10.0, -4.0, -1.0, 0.0, 1.0, 10.0};
    spec.tau_stop = 2.0;
    spec.tau_step = 0.1;

    spec.workers = 1;
    const std::string csv_one = to_csv(run_sweep(spec));
    spec.workers = 4;
    const std::string csv_four = to_csv(run_sweep(spec));
    spec.workers = 8;
    const std::string csv_eight = to_csv(run_sweep(spec));
    CHECK(csv_one == csv_four);
    CHECK(csv_one == csv_eight);
}

TEST_CASE("run_sweep: degenerate detunings are dropped, not fatal") {
    SweepSpec spec;
    spec.quantity = Quantity::Q2;
    spec.d_values = {0.0, bandedge::kDegenerateDetuning};
    spec.tau_stop = 1.0;
    spec.tau_step = 0.5;
    const Table table = run_sweep(spec);
    CHECK(table.header.size() == 2);  // tau + the single admissible column
}

TEST_CASE("run_sweep: asymptotic table reproduces the figure-3 relations") {
    SweepSpec spec;
    spec.quantity = Quantity::Asymptotic;
    spec.d_values = figure3_grid();
    const Table table = run_sweep(spec);
    REQUIRE(table.rows.size() == 401);  // 0.05 grid clears the degenerate window

    double previous_phi = 2.0;
    for (const auto& row : table.rows) {
        const double d = row[0];
        const double c_phi = row[1];
        const double c_psi = row[2];
        CAPTURE(d);
        CHECK(std::abs(c_psi - c_phi * c_phi) < 1e-12);
        CHECK(c_phi >= 0.0);
        CHECK(c_phi <= 1.0);
        if (d <= 0.0) {
            CHECK(c_phi <= previous_phi + 1e-12);
            previous_phi = c_phi;
        }
    }
    // d = -5 sits at row 100
    CHECK(table.rows[100][0] == doctest::Approx(-5.0));
    CHECK(table.rows[100][1] > 0.85);
    CHECK(table.rows[100][1] < 0.95);
}

TEST_CASE("run_sweep: c_general column equals the closed form") {
    SweepSpec base;
    base.d_values = {-3.0, 2.0};
    base.tau_stop = 3.0;
    base.tau_step = 0.05;
    base.alpha = 0.83;
    base.gamma = 1.1;

    SweepSpec closed = base;
    closed.quantity = Quantity::CPhi;
    SweepSpec general = base;
    general.quantity = Quantity::CGeneral;

    const Table closed_table = run_sweep(closed);
    const Table general_table = run_sweep(general);
    REQUIRE(closed_table.rows.size() == general_table.rows.size());
    for (std::size_t r = 0; r < closed_table.rows.size(); ++r) {
        for (std::size_t c = 1; c < closed_table.header.size(); ++c) {
            CHECK(std::abs(closed_table.rows[r][c] - general_table.rows[r][c]) <
                  1e-9);
        }
    }
}

TEST_CASE("run_sweep: Psi-family death and revival tracks the |q|^2 threshold") {
    SweepSpec spec;
    spec.quantity = Quantity::CPsi;
    spec.d_values = {10.0};
    spec.tau_stop = 5.0;
    spec.tau_step = 0.005;
    spec.alpha = std::sqrt(0.2);
    const Table c_table = run_sweep(spec);

    SweepSpec qspec = spec;
    qspec.quantity = Quantity::Q2;
    const Table q_table = run_sweep(qspec);

    bool died = false;
    for (std::size_t r = 0; r < c_table.rows.size(); ++r) {
        const double c = c_table.rows[r][1];
        const double q2 = q_table.rows[r][1];
        if (c == 0.0) died = true;
        if (std::abs(q2 - 0.5) < 1e-3) continue;  // classification boundary
        CAPTURE(q_table.rows[r][0]);
        CHECK((c > 0.0) == (q2 > 0.5));
    }
    CHECK(died);
    CHECK(c_table.rows.back()[1] == 0.0);
}

TEST_CASE("svg rendering") {
    SweepSpec spec;
    spec.quantity = Quantity::Q2;
    spec.d_values = {-1.0, 1.0};
    spec.tau_stop = 2.0;
    spec.tau_step = 0.2;
    const std::string svg = to_svg(run_sweep(spec), "test");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 2);
}

TEST_CASE("cmd_figure: files, normalization row, trapping column") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / "bandedge-test-figures";
    fs::remove_all(dir);

    REQUIRE(bandedge::cli::cmd_figure(1, true, dir.string(), 2) == 0);
    REQUIRE(fs::exists(dir / "figure1.csv"));
    REQUIRE(fs::exists(dir / "figure1.svg"));

    std::ifstream stream(dir / "figure1.csv");
    std::string line;
    std::getline(stream, line);
    CHECK(line == "tau,c_phi(d=-10),c_phi(d=-4),c_phi(d=-1),c_phi(d=0),"
                  "c_phi(d=1),c_phi(d=10)");

    std::vector<std::vector<double>> rows;
    while (std::getline(stream, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    REQUIRE(rows.size() == 1001);
    for (std::size_t c = 1; c < rows.front().size(); ++c) {
        CHECK(rows.front()[c] == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (const auto& row : rows) {
        for (std::size_t c = 1; c < row.size(); ++c) {
            CHECK(row[c] <= 1.0 + 1e-9);
            CHECK(row[c] >= 0.0);
        }
    }
    // the deep-in-gap column stays trapped near 1 through tau = 10
    CHECK(rows.back()[0] == doctest::Approx(10.0));
    CHECK(rows.back()[1] > 0.9);

    fs::remove_all(dir);
}

TEST_CASE("stark plan") {
    const auto plan = plan_stark_shift(-5.0, 5.0, kInvSqrt2);
    CHECK(plan.shift == doctest::Approx(10.0));
    CHECK(plan.trapping_phi_in > 0.85);
    CHECK(plan.trapping_phi_in < 0.95);
    CHECK(plan.trapping_phi_out < 0.01);
    CHECK_FALSE(plan.psi_death_threshold.has_value());
    CHECK_FALSE(plan.esd_risk_at_out);

    const auto idle = plan_stark_shift(-3.0, -3.0, kInvSqrt2);
    CHECK(idle.shift == 0.0);
    CHECK(idle.trapping_phi_in == idle.trapping_phi_out);
    CHECK(idle.trapping_psi_in == idle.trapping_psi_out);

    const auto risky = plan_stark_shift(-10.0, 10.0, std::sqrt(0.2));
    CHECK(risky.shift == doctest::Approx(20.0));
    REQUIRE(risky.psi_death_threshold.has_value());
    CHECK(*risky.psi_death_threshold == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(risky.esd_risk_at_out);

    const std::string text = bandedge::cli::format_stark_plan(risky);
    CHECK(text.find("Delta/beta = 20") != std::string::npos);
    CHECK(text.find("yes") != std::string::npos);
}
