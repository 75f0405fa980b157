#pragma once

#include <complex>

#include "genli/licore.hpp"

namespace genli {

// Balance rule for the contour abscissa: c = 1 + 0.45 min(1, b), never above
// (b+2)/2; keeps the kernel growth (c+b)/(b+1-c) and the ln zeta decay in
// check.
double contour_abscissa(double b);

// Route C: the zeta part of the coefficient as the vertical-line integral
//   -(n/2pi) \int ln zeta(c+it) (c+b+it)^{n-1} (c-b-1+it)^{-(n+1)} dt,
// evaluated as twice the real part over t >= 0: panels on [0, T0] split at
// half-periods of the dominant ln-2 oscillation, then a per-prime
// integration-by-parts tail.  The smooth prime-density correction beyond the
// evaluator's truncation is added, mirroring the series route.
CoeffResult d_zeta_contour(long n, double b, double c, double tol, const VonMangoldtTable& table,
                           std::uint64_t prime_limit = 2000000);

// Same kernel with ln((c-1+it) zeta(c+it)): evaluates the shifted coefficient
// directly (the (z-1) factor removes the pole contribution).
CoeffResult d_shifted_contour(long n, double b, double c, double tol,
                              const VonMangoldtTable& table,
                              std::uint64_t prime_limit = 2000000);

// Complex integrand sample (for the conjugate-symmetry checks).
std::complex<double> contour_integrand(long n, double b, double c, double t,
                                       const VonMangoldtTable& table,
                                       std::uint64_t prime_limit = 200000);

// Full coefficient via the contour zeta part: the gamma, pi and pole terms
// come from their closed forms, the zeta part from d_zeta_contour.
CoeffResult d_xi_route_c(long n, double b, const VonMangoldtTable& table,
                         const Truncation& trunc = {});

}  // namespace genli
