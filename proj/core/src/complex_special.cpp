#include "bandedge/complex_special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bandedge {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

// Trapezoidal step of the pole-corrected rational series and the matching
// number of Gaussian nodes; exp(-(kNodes * kStep)^2) ~ 4e-19, below double
// roundoff.
constexpr double kStep = 0.25;
constexpr int kNodes = 26;

// Evaluation switches from the series to the Laplace continued fraction at
// this radius. Measured against quadrature references, the fraction only
// reaches ~1e-13 relative error from |z| ~ 6 upward (at |z| = 4 it is
// stuck near 1e-5), so the switch sits at 8 with margin.
constexpr double kSwitchRadius = 8.0;
constexpr int kFractionDepth = 26;

void require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument(std::string(who) + ": non-finite input");
    }
}

const std::array<double, kNodes + 1>& integer_grid_weights() {
    static const std::array<double, kNodes + 1> table = [] {
        std::array<double, kNodes + 1> t{};
        for (int k = 0; k <= kNodes; ++k) {
            const double node = k * kStep;
            t[k] = std::exp(-node * node);
        }
        return t;
    }();
    return table;
}

const std::array<double, kNodes>& half_grid_weights() {
    static const std::array<double, kNodes> table = [] {
        std::array<double, kNodes> t{};
        for (int k = 0; k < kNodes; ++k) {
            const double node = (k + 0.5) * kStep;
            t[k] = std::exp(-node * node);
        }
        return t;
    }();
    return table;
}

// Trapezoidal sum over Gaussian-weighted poles, with the residue
// correction for the pole of the defining integral at t = z. The grid is
// shifted by half a step whenever Re(z) comes close to an integer node, so
// z never collides with a node and the correction denominator stays away
// from zero.
Complex w_series(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    const double ratio = x / kStep;
    const bool half_grid = std::abs(ratio - std::round(ratio)) < 0.25;

    Complex sum;
    if (half_grid) {
        const auto& wts = half_grid_weights();
        sum = Complex(0.0, 0.0);
        for (int k = 0; k < kNodes; ++k) {
            const double node = (k + 0.5) * kStep;
            sum += wts[k] * (1.0 / (z - node) + 1.0 / (z + node));
        }
    } else {
        const auto& wts = integer_grid_weights();
        sum = 1.0 / z;
        for (int k = 1; k <= kNodes; ++k) {
            const double node = k * kStep;
            sum += wts[k] * (1.0 / (z - node) + 1.0 / (z + node));
        }
    }
    Complex w = Complex(0.0, kStep / kPi) * sum;

    // Correction is skipped where it falls below roundoff relative to w;
    // that also keeps exp(-z^2) representable.
    if (2.0 * kPi * y / kStep - (y * y - x * x) < 40.0) {
        const Complex egrid = std::exp(Complex(0.0, -2.0 * kPi / kStep) * z);
        const Complex den = half_grid ? 1.0 + egrid : 1.0 - egrid;
        w += 2.0 * std::exp(-z * z) / den;
    }
    return w;
}

Complex w_continued_fraction(Complex z) {
    Complex t = z;
    for (int k = kFractionDepth; k >= 1; --k) {
        t = z - (0.5 * k) / t;
    }
    return Complex(0.0, 1.0) / (kSqrtPi * t);
}

}  // namespace

namespace detail {

Complex faddeeva_w_upper(Complex z) {
    if (std::norm(z) >= kSwitchRadius * kSwitchRadius) {
        return w_continued_fraction(z);
    }
    return w_series(z);
}

}  // namespace detail

Complex erfcx_scaled(Complex z) {
    require_finite(z, "erfcx_scaled");
    if (z.real() >= 0.0) {
        // erfcx(z) = w(iz); iz lies in the closed upper half-plane.
        return detail::faddeeva_w_upper(Complex(-z.imag(), z.real()));
    }
    // Reflection erfcx(z) = 2 exp(z^2) - erfcx(-z).
    const double re_z2 = (z.real() - z.imag()) * (z.real() + z.imag());
    if (re_z2 > 709.0) {
        throw std::overflow_error(
            "erfcx_scaled: 2*exp(z^2) exceeds the double range for Re(z) < 0");
    }
    return 2.0 * std::exp(z * z) - erfcx_scaled(-z);
}

Complex erfc_complex(Complex z) {
    require_finite(z, "erfc_complex");
    if (z.real() >= 0.0) {
        const double re_mz2 = (z.imag() - z.real()) * (z.imag() + z.real());
        if (re_mz2 > 709.0) {
            throw std::overflow_error(
                "erfc_complex: result magnitude exceeds the double range");
        }
        return std::exp(-(z * z)) *
               detail::faddeeva_w_upper(Complex(-z.imag(), z.real()));
    }
    return 2.0 - erfc_complex(-z);
}

Complex principal_sqrt(Complex z) {
    require_finite(z, "principal_sqrt");
    if (z.imag() == 0.0) {
        z = Complex(z.real(), +0.0);  // branch cut approached from above
    }
    Complex w = std::sqrt(z);
    if (w.real() < 0.0 || (w.real() == 0.0 && w.imag() < 0.0)) {
        w = -w;
    }
    return w;
}

Complex principal_cbrt(Complex z) {
    require_finite(z, "principal_cbrt");
    if (z.imag() == 0.0) {
        z = Complex(z.real(), +0.0);
    }
    if (z == Complex(0.0, 0.0)) {
        return {0.0, 0.0};
    }
    return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

}  // namespace bandedge
