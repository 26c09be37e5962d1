#include "bandedge/band_edge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bandedge/errors.hpp"

namespace bandedge {
namespace {

constexpr double kPi = std::numbers::pi;

// exp(i pi/4)
const Complex kEighthTurn{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0};

// Relative tolerance deciding whether principal_sqrt(x^2) reproduced x
// itself, i.e. whether the root sits on the physical sheet and
// contributes a pole term. The two branches of the formula agree exactly
// at the switch, so the classification only has to be consistent, not
// sharp.
constexpr double kPoleMatchTol = 1e-8;

constexpr double kMinRootSeparation = 1e-6;

double cubic_value(double y, double d) { return (y * y + d) * y - 1.0; }

// One real Newton polish of the positive real root.
double polish_real_root(double y, double d) {
    for (int it = 0; it < 3; ++it) {
        const double f = cubic_value(y, d);
        const double fp = 3.0 * y * y + d;
        if (fp == 0.0) break;
        y -= f / fp;
    }
    return y;
}

Complex polish_complex_root(Complex y, double d) {
    for (int it = 0; it < 2; ++it) {
        const Complex f = (y * y + d) * y - 1.0;
        const Complex fp = 3.0 * y * y + d;
        if (fp == Complex(0.0, 0.0)) break;
        y -= f / fp;
    }
    return y;
}

}  // namespace

BandEdgeRoots compute_roots(double d) {
    if (!std::isfinite(d)) {
        throw std::invalid_argument("compute_roots: non-finite detuning");
    }
    if (std::abs(d) > kMaxDetuning) {
        throw std::invalid_argument(
            "compute_roots: |d| > 100 rejected (root conditioning)");
    }
    if (std::abs(d - kDegenerateDetuning) < kDegenerateWindow) {
        throw DegenerateDetuningError(
            "compute_roots: detuning within 1e-6 of the degenerate point "
            "d* = -3/4^(1/3) ~ -1.88988, where two roots of y^3 + d y - 1 "
            "merge and the residues a_j diverge; sweep around this point");
    }

    // Cardano pair for y^3 + d y - 1 = 0, branches coupled through
    // a_minus = -d / (3 a_plus) so the three combinations below are roots
    // for every d.
    const double radicand = 1.0 + 4.0 * d * d * d / 27.0;
    const Complex root_term = principal_sqrt(Complex(radicand, 0.0));
    const Complex a_plus = principal_cbrt(0.5 * (1.0 + root_term));
    const Complex a_minus = (d == 0.0) ? Complex(0.0, 0.0)
                                       : Complex(-d / 3.0, 0.0) / a_plus;

    const Complex omega(-0.5, std::sqrt(3.0) / 2.0);        // exp(2 pi i / 3)
    const Complex omega2(-0.5, -std::sqrt(3.0) / 2.0);

    std::array<Complex, 3> y = {
        a_plus + a_minus,
        a_plus * omega + a_minus * omega2,
        a_plus * omega2 + a_minus * omega,
    };
    for (auto& root : y) {
        root = polish_complex_root(root, d);
    }

    // Exactly one root has positive real part; it is real and carries the
    // bound state. The other two are either a conjugate pair (d above the
    // degenerate point) or both real negative (below it).
    std::sort(y.begin(), y.end(),
              [](const Complex& u, const Complex& v) { return u.real() > v.real(); });
    const double y1 = polish_real_root(y[0].real(), d);
    Complex y2 = y[1];
    Complex y3 = y[2];
    if (std::abs(y2.imag()) > 1e-9 || std::abs(y3.imag()) > 1e-9) {
        if (y2.imag() < 0.0) std::swap(y2, y3);
        y2 = polish_complex_root(y2, d);
        y3 = std::conj(y2);
    } else {
        y2 = Complex(polish_real_root(y2.real(), d), 0.0);
        y3 = Complex(polish_real_root(y3.real(), d), 0.0);
        if (y2.real() < y3.real()) std::swap(y2, y3);
    }

    BandEdgeRoots roots;
    roots.d = d;
    roots.a_plus = a_plus;
    roots.a_minus = a_minus;
    roots.x = {Complex(y1, 0.0) * kEighthTurn, y2 * kEighthTurn, y3 * kEighthTurn};

    const double sep01 = std::abs(roots.x[0] - roots.x[1]);
    const double sep02 = std::abs(roots.x[0] - roots.x[2]);
    const double sep12 = std::abs(roots.x[1] - roots.x[2]);
    if (std::min({sep01, sep02, sep12}) < kMinRootSeparation) {
        throw RootConditioningError(
            "compute_roots: root separation below 1e-6; residues are "
            "ill-conditioned at this detuning");
    }

    for (int j = 0; j < 3; ++j) {
        const int i = (j + 1) % 3;
        const int k = (j + 2) % 3;
        roots.a[j] = roots.x[j] / ((roots.x[j] - roots.x[i]) * (roots.x[j] - roots.x[k]));
    }
    return roots;
}

Complex amplitude_q(const BandEdgeRoots& roots, double tau) {
    if (!std::isfinite(tau) || tau < 0.0) {
        throw std::invalid_argument("amplitude_q: tau must be finite and >= 0");
    }
    const double sqrt_tau = std::sqrt(tau);
    Complex acc(0.0, 0.0);
    for (int j = 0; j < 3; ++j) {
        const Complex x = roots.x[j];
        const Complex x2 = x * x;
        const Complex s = principal_sqrt(x2);
        // Roots with principal_sqrt(x^2) == x sit on the physical sheet
        // and contribute a residue; for the others the residue cancels
        // identically and only the branch-cut term below survives.
        if (std::abs(s - x) <= kPoleMatchTol * std::abs(x)) {
            if (x2.real() * tau > 700.0) {
                throw std::overflow_error(
                    "amplitude_q: scaled evaluation impossible at this tau");
            }
            acc += 2.0 * roots.a[j] * x * std::exp(x2 * tau);
        }
        acc -= roots.a[j] * s * erfcx_scaled(s * sqrt_tau);
    }
    return acc * std::polar(1.0, roots.d * tau);
}

Complex amplitude_q(double d, double tau) {
    return amplitude_q(compute_roots(d), tau);
}

AmplitudeSeries amplitude_series(double d, std::span<const double> tau_grid) {
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!std::isfinite(tau_grid[i]) || tau_grid[i] < 0.0) {
            throw std::invalid_argument(
                "amplitude_series: grid values must be finite and >= 0");
        }
        if (i > 0 && tau_grid[i] < tau_grid[i - 1]) {
            throw std::invalid_argument("amplitude_series: grid must be monotone");
        }
    }
    const BandEdgeRoots roots = compute_roots(d);
    AmplitudeSeries series;
    series.d = d;
    series.tau.assign(tau_grid.begin(), tau_grid.end());
    series.q.reserve(tau_grid.size());
    for (const double tau : tau_grid) {
        series.q.push_back(amplitude_q(roots, tau));
    }
    return series;
}

double steady_amplitude_sq(const BandEdgeRoots& roots) {
    const Complex x1 = roots.x[0];
    if ((x1 * x1).real() < -1e-9) {
        return 0.0;  // decaying branch: no bound state survives
    }
    const double value = 4.0 * std::norm(roots.a[0] * x1);
    return std::clamp(value, 0.0, 1.0);
}

double steady_amplitude_sq(double d) {
    return steady_amplitude_sq(compute_roots(d));
}

double beta_from_physical(const PhysicalParams& params) {
    if (!std::isfinite(params.omega0) || !std::isfinite(params.dipole) ||
        params.omega0 <= 0.0 || params.dipole <= 0.0) {
        throw std::invalid_argument(
            "beta_from_physical: omega0 and dipole must be positive");
    }
    const double denom = 6.0 * kPi * constants::kVacuumPermittivity *
                         constants::kReducedPlanck *
                         std::pow(constants::kSpeedOfLight, 3);
    const double beta_32 =
        std::pow(params.omega0, 3.5) * params.dipole * params.dipole / denom;
    return std::pow(beta_32, 2.0 / 3.0);
}

double excited_population(double p0, double d, double tau) {
    if (!std::isfinite(p0) || p0 < 0.0 || p0 > 1.0) {
        throw std::invalid_argument("excited_population: p0 must lie in [0, 1]");
    }
    return std::min(p0 * std::norm(amplitude_q(d, tau)), p0);
}

}  // namespace bandedge
