#include <doctest.h>

#include <cmath>
#include <random>

#include "bandedge/entanglement.hpp"
#include "bandedge/errors.hpp"
#include "test_support.hpp"

using bandedge::asymptotic_concurrence;
using bandedge::BellFamily;
using bandedge::build_bell_like;
using bandedge::concurrence;
using bandedge::concurrence_phi_closed;
using bandedge::concurrence_psi_closed;
using bandedge::esd_threshold;
using bandedge::evolve_two_qubit;
using bandedge::TwoQubitDensityMatrix;

namespace {
const double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

TEST_CASE("concurrence: anchors") {
    const TwoQubitDensityMatrix bell =
        build_bell_like({BellFamily::Phi, kInvSqrt2, 0.0});
    CHECK(concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));

    const TwoQubitDensityMatrix mixed = 0.25 * TwoQubitDensityMatrix::Identity();
    CHECK(concurrence(mixed) == doctest::Approx(0.0));

    // Werner family: C = max{0, (3p - 1)/2}
    const TwoQubitDensityMatrix psi_plus =
        build_bell_like({BellFamily::Psi, kInvSqrt2, 0.0});
    for (const double p : {0.1, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
        const TwoQubitDensityMatrix werner =
            p * psi_plus + (1.0 - p) * 0.25 * TwoQubitDensityMatrix::Identity();
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        CAPTURE(p);
        CHECK(concurrence(werner) == doctest::Approx(expected).epsilon(1e-12));
    }

    TwoQubitDensityMatrix junk = TwoQubitDensityMatrix::Identity();
    CHECK_THROWS_AS((void)concurrence(junk), bandedge::InvalidStateError);
}

TEST_CASE("concurrence: invariant under local unitaries") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 40; ++i) {
        const TwoQubitDensityMatrix rho = test_support::random_two_qubit_state(rng);
        const Eigen::Matrix4cd u = test_support::kron2(
            test_support::random_unitary2(rng), test_support::random_unitary2(rng));
        const TwoQubitDensityMatrix rotated = u * rho * u.adjoint();
        CHECK(std::abs(concurrence(rotated) - concurrence(rho)) < 1e-9);
    }
}

TEST_CASE("closed forms match the general concurrence on evolved states") {
    std::mt19937 rng(999);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const BellFamily family = uni(rng) < 0.5 ? BellFamily::Phi : BellFamily::Psi;
        const double alpha = uni(rng);
        const double gamma = 2.0 * M_PI * uni(rng);
        double d = -10.0 + 20.0 * uni(rng);
        while (!test_support::admissible_detuning(d)) d = -10.0 + 20.0 * uni(rng);
        const double tau = 20.0 * uni(rng);

        const TwoQubitDensityMatrix evolved =
            evolve_two_qubit(build_bell_like({family, alpha, gamma}), d, tau);
        const double general = concurrence(evolved);
        const double closed = family == BellFamily::Phi
                                  ? concurrence_phi_closed(alpha, d, tau)
                                  : concurrence_psi_closed(alpha, d, tau);
        CAPTURE(alpha);
        CAPTURE(gamma);
        CAPTURE(d);
        CAPTURE(tau);
        CHECK(std::abs(general - closed) < 1e-9);
    }
}

TEST_CASE("closed forms: reductions and phase independence") {
    CHECK(concurrence_phi_closed(kInvSqrt2, -3.0, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_phi_closed(0.0, -3.0, 4.0) == 0.0);
    CHECK(concurrence_psi_closed(1.0, -3.0, 4.0) == 0.0);

    // C_psi = |q|^4 for the Bell state: |q|^2 = 0.5 gives 0.25
    const double d = 10.0;
    // find a tau with |q|^2 near 0.5 by bisection on the early decay
    double lo = 0.0, hi = 3.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::norm(bandedge::amplitude_q(d, mid)) > 0.5 ? lo : hi) = mid;
    }
    const double tau_half = 0.5 * (lo + hi);
    CHECK(concurrence_psi_closed(kInvSqrt2, d, tau_half) ==
          doctest::Approx(0.25).epsilon(1e-6));

    // gamma never enters the closed forms; the general value agrees for a
    // grid of phases
    for (double gamma = 0.0; gamma < 6.3; gamma += 0.7) {
        const TwoQubitDensityMatrix evolved = evolve_two_qubit(
            build_bell_like({BellFamily::Phi, 0.6, gamma}), -1.0, 2.0);
        CHECK(std::abs(concurrence(evolved) -
                       concurrence_phi_closed(0.6, -1.0, 2.0)) < 1e-9);
    }
}

TEST_CASE("asymptotic_concurrence: trapping values and orderings") {
    CHECK(asymptotic_concurrence(BellFamily::Phi, kInvSqrt2, -5.0) ==
          doctest::Approx(0.9254017408054837).epsilon(1e-9));

    // Psi trapping is the square of Phi trapping for Bell inputs
    for (const double d : {-10.0, -5.0, -2.0, -0.5, 1.0, 4.0}) {
        const double phi_inf = asymptotic_concurrence(BellFamily::Phi, kInvSqrt2, d);
        const double psi_inf = asymptotic_concurrence(BellFamily::Psi, kInvSqrt2, d);
        CAPTURE(d);
        CHECK(std::abs(psi_inf - phi_inf * phi_inf) < 1e-12);
        CHECK(psi_inf <= phi_inf + 1e-15);
    }

    // deeper in the gap means more trapped entanglement
    double previous = 2.0;
    for (double d = -10.0; d <= 0.0 + 1e-9; d += 0.1) {
        if (!test_support::admissible_detuning(d)) continue;
        const double value = asymptotic_concurrence(BellFamily::Phi, kInvSqrt2, d);
        CAPTURE(d);
        CHECK(value <= previous + 1e-12);
        previous = value;
    }

    // less initial entanglement, less trapped entanglement (Phi family)
    const double qs_fixed = -4.0;
    double prev_c = -1.0;
    for (double alpha = 0.05; alpha <= kInvSqrt2 + 1e-12; alpha += 0.05) {
        const double c = asymptotic_concurrence(BellFamily::Phi, alpha, qs_fixed);
        CHECK(c >= prev_c - 1e-12);
        prev_c = c;
    }

    CHECK(asymptotic_concurrence(BellFamily::Phi, kInvSqrt2, 0.25) < 0.4);
}

TEST_CASE("esd_threshold") {
    const auto th = esd_threshold(BellFamily::Psi, std::sqrt(0.2));
    REQUIRE(th.has_value());
    CHECK(*th == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_FALSE(esd_threshold(BellFamily::Psi, kInvSqrt2).has_value());
    CHECK_FALSE(esd_threshold(BellFamily::Psi, std::sqrt(0.8)).has_value());
    CHECK_FALSE(esd_threshold(BellFamily::Phi, 0.3).has_value());

    CHECK_THROWS_AS((void)esd_threshold(BellFamily::Psi, 0.0),
                    bandedge::DegenerateStateError);
    CHECK_THROWS_AS((void)esd_threshold(BellFamily::Psi, 1.0),
                    bandedge::DegenerateStateError);

    // the threshold is where the general concurrence hits zero as well
    const double alpha = std::sqrt(0.2);
    const double d = 10.0;
    double lo = 0.0, hi = 3.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::norm(bandedge::amplitude_q(d, mid)) > 0.5 ? lo : hi) = mid;
    }
    const double tau_at_half = 0.5 * (lo + hi);
    const double before = concurrence(evolve_two_qubit(
        build_bell_like({BellFamily::Psi, alpha, 0.0}), d, tau_at_half - 0.05));
    const double after = concurrence(evolve_two_qubit(
        build_bell_like({BellFamily::Psi, alpha, 0.0}), d, tau_at_half + 0.05));
    CHECK(before > 0.0);
    CHECK(after == doctest::Approx(0.0));
}
