#pragma once

#include <vector>

#include "genli/real.hpp"

namespace genli {

// psi(x) for x > 0, accurate to the working precision less a few ulps.
Real digamma(const Real& x);
inline Real digamma(double x) { return digamma(Real(x)); }

// Trigamma psi'(x), x > 0.  Euler-Maclaurin after recurrence shift.
Real trigamma(const Real& x);

// Generalized Laguerre polynomial L^1_m(x) by the three-term recurrence in m.
Real laguerre_l1(long m, const Real& x);

// One recurrence pass returning L^1_0(x) .. L^1_{m_max}(x); the series engines
// consume consecutive degrees of the same argument.
std::vector<Real> laguerre_l1_all(long m_max, const Real& x);

// Chebyshev polynomial of the second kind U_m(x), |x| <= 1.
Real chebyshev_u(long m, const Real& x);

// Hurwitz zeta(j, q) for integer j >= 2, q > 0: direct sum plus
// Euler-Maclaurin tail.
Real hurwitz_zeta_int(long j, const Real& q);

// zeta(n) for integer n >= 2 at working precision.
Real zeta_int(unsigned long n);

// B_{2k} from zeta(2k): B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2pi)^{2k}.
Real bernoulli_2k(long k);

// Exact binomial C(n, k) as Real (n modest; used by the polynomial oracles).
Real binomial(long n, long k);

}  // namespace genli
