#include "genli/special.hpp"

namespace genli {

Real digamma(const Real& x) {
  if (!(x > Real(0))) throw domain_error("digamma: requires x > 0");
  Real r;
  mpfr_digamma(r.ptr(), x.ptr(), MPFR_RNDN);
  return r;
}

Real trigamma(const Real& x) {
  if (!(x > Real(0))) throw domain_error("trigamma: requires x > 0");
  // Shift x above ~1.5*P bits of asymptotic validity, then
  // psi'(y) ~ 1/y + 1/(2y^2) + sum_k B_{2k} / y^{2k+1}.
  long shift_to = working_digits() + 10;
  Real y = x;
  Real acc(0);
  while (y < Real(shift_to)) {
    acc += Real(1) / (y * y);
    y += Real(1);
  }
  Real inv = Real(1) / y;
  Real inv2 = inv * inv;
  Real s = inv + inv2 / 2;
  Real p = inv * inv2;  // y^{-(2k+1)} with k = 1
  for (long k = 1; k <= 60; ++k) {
    Real term = bernoulli_2k(k) * p;
    s += term;
    if (abs(term) < abs(s) * working_eps()) break;
    p *= inv2;
  }
  return acc + s;
}

Real laguerre_l1(long m, const Real& x) {
  if (m < 0) throw domain_error("laguerre_l1: requires m >= 0");
  Real p0(1);
  if (m == 0) return p0;
  Real p1 = Real(2) - x;
  for (long k = 1; k < m; ++k) {
    // (k+1) L^1_{k+1} = (2k+2-x) L^1_k - (k+1) L^1_{k-1}
    Real next = ((Real(2 * k + 2) - x) * p1 - Real(k + 1) * p0) / Real(k + 1);
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

std::vector<Real> laguerre_l1_all(long m_max, const Real& x) {
  if (m_max < 0) throw domain_error("laguerre_l1_all: requires m_max >= 0");
  std::vector<Real> out;
  out.reserve(m_max + 1);
  out.emplace_back(1);
  if (m_max == 0) return out;
  out.push_back(Real(2) - x);
  for (long k = 1; k < m_max; ++k)
    out.push_back(((Real(2 * k + 2) - x) * out[k] - Real(k + 1) * out[k - 1]) / Real(k + 1));
  return out;
}

Real chebyshev_u(long m, const Real& x) {
  if (m < 0) throw domain_error("chebyshev_u: requires m >= 0");
  if (abs(x) > Real(1)) throw domain_error("chebyshev_u: requires |x| <= 1");
  Real p0(1);
  if (m == 0) return p0;
  Real p1 = Real(2) * x;
  for (long k = 2; k <= m; ++k) {
    Real next = Real(2) * x * p1 - p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

Real hurwitz_zeta_int(long j, const Real& q) {
  if (j < 2) throw domain_error("hurwitz_zeta_int: requires j >= 2 (series diverges)");
  if (!(q > Real(0))) throw domain_error("hurwitz_zeta_int: requires q > 0");
  // zeta(j, q) = sum_{k<N} (k+q)^{-j} + EM tail at N.  N large enough that the
  // Bernoulli terms decay geometrically by ~1/4 per order.
  long N = working_digits() / 2 + j + 8;
  SumAccumulator acc;
  for (long k = 0; k < N; ++k) acc.feed(pow(q + Real(k), -j));
  Real s = acc.total();
  Real Nq = q + Real(N);
  Real invNq = Real(1) / Nq;
  s += pow(Nq, 1 - j) / Real(j - 1);
  s += pow(Nq, -j) / 2;
  // sum_k B_{2k}/(2k)! * (j)(j+1)...(j+2k-2) * Nq^{-j-2k+1}
  Real factor = Real(j) * pow(Nq, -j - 1);  // k=1 rising-factorial piece
  Real kfac(2);
  for (long k = 1; k <= 60; ++k) {
    if (k > 1) {
      factor *= Real(j + 2 * k - 3) * Real(j + 2 * k - 2) * invNq * invNq;
      kfac *= Real((2 * k - 1) * (2 * k));
    }
    Real term = bernoulli_2k(k) / kfac * factor;
    s += term;
    if (abs(term) < abs(s) * working_eps()) break;
  }
  return s;
}

Real zeta_int(unsigned long n) {
  Real r;
  mpfr_zeta_ui(r.ptr(), n, MPFR_RNDN);
  return r;
}

Real bernoulli_2k(long k) {
  Real z = zeta_int(static_cast<unsigned long>(2 * k));
  Real fact(1);
  for (long i = 2; i <= 2 * k; ++i) fact *= Real(i);
  Real twopi = Real(2) * const_pi();
  Real b = Real(2) * fact * z / pow(twopi, 2 * k);
  return (k % 2 == 0) ? -b : b;
}

Real binomial(long n, long k) {
  if (k < 0 || k > n) return Real(0);
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  Real r;
  mpfr_set_z(r.ptr(), z, MPFR_RNDN);
  mpz_clear(z);
  return r;
}

}  // namespace genli
