#include "genli/zeta_line_fast.hpp"

#include <cmath>

namespace genli {

ZetaLinePrimes::ZetaLinePrimes(double c, const VonMangoldtTable& table, std::uint64_t m_limit)
    : c_(c), m_limit_(std::min(m_limit, table.limit)) {
  lnm_.reserve(1 << 16);
  coef_.reserve(1 << 16);
  for (const VmEntry& e : table.entries) {
    if (e.m > m_limit_) break;
    double lm = std::log(static_cast<double>(e.m));
    double a = std::exp(-c * lm) / e.k;
    lnm_.push_back(lm);
    coef_.push_back(a);
    c4_ += a / (lm * lm * lm * lm);
  }
}

std::complex<double> ZetaLinePrimes::ln_zeta(double t) const {
  double sre = 0, cre = 0, sim = 0, cim = 0;
  const size_t n = lnm_.size();
  for (size_t i = 0; i < n; ++i) {
    double ph = t * lnm_[i];
    double re = coef_[i] * std::cos(ph);
    double im = -coef_[i] * std::sin(ph);
    double y = re - cre;
    double s = sre + y;
    cre = (s - sre) - y;
    sre = s;
    y = im - cim;
    s = sim + y;
    cim = (s - sim) - y;
    sim = s;
  }
  return {sre, sim};
}

double ZetaLinePrimes::series_tail_bound() const {
  double M = static_cast<double>(m_limit_);
  double lnM = std::log(M);
  return 2.0 * std::pow(M, 1.0 - c_) / ((c_ - 1.0) * lnM);
}

ZetaLineEM::ZetaLineEM(double c, double t_max) : c_(c) {
  n_max_ = std::max<long>(32, static_cast<long>(std::ceil(t_max)) + 8);
  lnn_.resize(n_max_ + 1);
  nmc_.resize(n_max_ + 1);
  for (long n = 1; n <= n_max_; ++n) {
    lnn_[n] = std::log(static_cast<double>(n));
    nmc_[n] = std::exp(-c * lnn_[n]);
  }
}

std::complex<double> ZetaLineEM::ln_zeta(double t) const {
  using cplx = std::complex<double>;
  static const double bern[] = {1.0 / 6,       -1.0 / 30,     1.0 / 42,      -1.0 / 30,
                                5.0 / 66,      -691.0 / 2730, 7.0 / 6,       -3617.0 / 510,
                                43867.0 / 798, -174611.0 / 330};
  long N = std::min<long>(n_max_, std::max<long>(24, static_cast<long>(std::abs(t)) + 8));
  cplx s(c_, t);
  cplx sum = 0;
  double sre = 0, cre = 0, sim = 0, cim = 0;
  for (long n = 1; n < N; ++n) {
    double ph = t * lnn_[n];
    double re = nmc_[n] * std::cos(ph);
    double im = -nmc_[n] * std::sin(ph);
    double y = re - cre;
    double acc = sre + y;
    cre = (acc - sre) - y;
    sre = acc;
    y = im - cim;
    acc = sim + y;
    cim = (acc - sim) - y;
    sim = acc;
  }
  sum = cplx(sre, sim);
  cplx Nms = std::polar(nmc_[N], -t * lnn_[N]);  // N^{-s}
  sum += Nms * static_cast<double>(N) / (s - 1.0);
  sum += 0.5 * Nms;
  cplx fact = s * Nms / static_cast<double>(N);
  double kfac = 2;
  for (int k = 1; k <= 10; ++k) {
    if (k > 1) {
      fact *= (s + cplx(2 * k - 3)) * (s + cplx(2 * k - 2)) /
              (static_cast<double>(N) * static_cast<double>(N));
      kfac *= (2 * k - 1) * (2 * k);
    }
    sum += bern[k - 1] / kfac * fact;
  }
  return std::log(sum);  // principal branch; see header
}

}  // namespace genli
