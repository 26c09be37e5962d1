#pragma once

#include <complex>

namespace bandedge {

using Complex = std::complex<double>;

// Complementary error function erfc(z) = 1 - erf(z) for complex argument.
//
// Evaluated through the Faddeeva function w(z): a pole-corrected
// trapezoidal series below |z| = 8 and the Laplace continued fraction
// above. Relative accuracy is ~1e-13 wherever the result is
// representable in double precision.
//
// Throws std::invalid_argument for non-finite input and
// std::overflow_error where |erfc(z)| exceeds the double range
// (Im(z)^2 - Re(z)^2 beyond ~709).
Complex erfc_complex(Complex z);

// Scaled complementary error function erfcx(z) = exp(z^2) erfc(z).
//
// For Re(z) >= 0 this is the Faddeeva function w(iz) and never
// overflows; for Re(z) < 0 it grows like 2 exp(z^2) and throws
// std::overflow_error once that factor leaves the double range.
Complex erfcx_scaled(Complex z);

// Principal square root: w with w^2 = z and arg(w) in (-pi/2, pi/2].
Complex principal_sqrt(Complex z);

// Principal cube root: w with w^3 = z and arg(w) in (-pi/3, pi/3].
Complex principal_cbrt(Complex z);

namespace detail {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
Complex faddeeva_w_upper(Complex z);

}  // namespace detail

}  // namespace bandedge
