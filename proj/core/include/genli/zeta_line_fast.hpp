#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "genli/sieve.hpp"

namespace genli {

// Double-precision evaluator of ln zeta(c+it) from the truncated prime-power
// series.  Used for the oscillatory tail expansion of the contour route and
// as an independent cross-check of the Euler-Maclaurin evaluator; accuracy is
// limited by the truncation, ~M^{1-c}/((c-1) ln M).
class ZetaLinePrimes {
 public:
  ZetaLinePrimes(double c, const VonMangoldtTable& table, std::uint64_t m_limit);

  std::complex<double> ln_zeta(double t) const;  // Kahan-compensated, fixed order
  double c() const { return c_; }
  std::uint64_t m_limit() const { return m_limit_; }
  long terms() const { return static_cast<long>(lnm_.size()); }
  const std::vector<double>& log_m() const { return lnm_; }
  const std::vector<double>& coeff() const { return coef_; }
  // sum of a_m / ln^4 m; scales the oscillatory-tail remainder bound
  double inv_log4_weight() const { return c4_; }
  // sum of a_m / ln m beyond the truncation, elementary bound
  double series_tail_bound() const;

 private:
  double c_;
  std::uint64_t m_limit_;
  std::vector<double> lnm_;
  std::vector<double> coef_;  // m^{-c}/k
  double c4_ = 0;
};

// ln zeta(c+it) through Euler-Maclaurin summation of the Dirichlet series:
// exact analytic continuation of the same function, error ~1e-13 for
// c > 1, |t| <= t_max.  The argument is principal, which coincides with the
// continuously summed series argument for c >= 1.05 (|arg| <= ln zeta(c) < pi).
class ZetaLineEM {
 public:
  ZetaLineEM(double c, double t_max);
  std::complex<double> ln_zeta(double t) const;
  double c() const { return c_; }

 private:
  double c_;
  long n_max_;
  std::vector<double> lnn_;  // ln n, n = 1..n_max
  std::vector<double> nmc_;  // n^{-c}
};

}  // namespace genli
