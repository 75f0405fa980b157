#include "genli/contour.hpp"

#include <cmath>

#include "genli/quad.hpp"
#include "genli/special.hpp"
#include "genli/zeta_line_fast.hpp"

namespace genli {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2HalfPeriod = 4.532360141827194;  // pi / ln 2

cplx cpow_int(cplx z, long n) {
  cplx r(1, 0);
  bool inv = n < 0;
  unsigned long e = static_cast<unsigned long>(inv ? -n : n);
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return inv ? cplx(1, 0) / r : r;
}

struct Kernel {
  long n;
  double alpha;  // c + b
  double beta;   // c - b - 1  (negative)
  cplx at(double t) const {
    return cpow_int(cplx(alpha, t), n - 1) / cpow_int(cplx(beta, t), n + 1);
  }
  // K, K', K'', K''' via the logarithmic derivative L = i[(n-1)/A - (n+1)/B]
  void derivatives(double t, cplx out[4]) const {
    cplx A(alpha, t), B(beta, t);
    cplx K = at(t);
    cplx L = cplx(0, 1) * (cplx(n - 1) / A - cplx(n + 1) / B);
    cplx L1 = cplx(n - 1) / (A * A) - cplx(n + 1) / (B * B);
    cplx L2 = cplx(0, -2) * (cplx(n - 1) / (A * A * A) - cplx(n + 1) / (B * B * B));
    out[0] = K;
    out[1] = K * L;
    out[2] = K * (L * L + L1);
    out[3] = K * (L * L * L + cplx(3) * L * L1 + L2);
  }
};

// 2 Re sum_m a_m int_{T0}^inf e^{-i t ln m} K(t) dt, each integral expanded by
// parts through (i omega)^{-4}; the dropped term is bounded by
// |K'''(T0)| sum_m a_m / omega^4 plus the series truncation beyond m_limit.
double oscillatory_tail(const ZetaLinePrimes& line, const Kernel& ker, double T0,
                        double& rem_bound) {
  cplx kd[4];
  ker.derivatives(T0, kd);
  const auto& lnm = line.log_m();
  const auto& am = line.coeff();
  double total = 0, comp = 0;
  for (size_t i = 0; i < lnm.size(); ++i) {
    double w = lnm[i];
    cplx iw(0, w);
    cplx iw2 = iw * iw;
    cplx phase = std::polar(1.0, -w * T0);
    cplx val = phase * (kd[0] / iw + kd[1] / iw2 + kd[2] / (iw2 * iw) + kd[3] / (iw2 * iw2));
    double term = 2 * am[i] * val.real();
    double y = term - comp;
    double s = total + y;
    comp = (s - total) - y;
    total = s;
  }
  rem_bound = 2 * std::abs(kd[3]) * line.inv_log4_weight() +
              2 * std::abs(kd[0]) * line.series_tail_bound();
  return total;
}

// asymptotic tail of 2 Re int_{T0}^inf ln(c-1+it) K(t) dt: expand
// ln(c-1+it) = ln t + i pi/2 + ln(1 - i(c-1)/t) and K(t) = -t^{-2} P(1/t),
// then integrate the powers of 1/t term by term.
double log_factor_tail(long n, double b, double c, double T0) {
  constexpr int kOrder = 5;
  cplx P[kOrder + 1] = {};
  {
    cplx e1[kOrder + 1] = {}, e2[kOrder + 1] = {};
    double alpha = c + b, beta = c - b - 1;
    cplx f1(1, 0), f2(1, 0);
    e1[0] = e2[0] = cplx(1, 0);
    for (int j = 1; j <= kOrder; ++j) {
      // C(n-1, j) (-i alpha)^j and C(n+j, j) (i beta)^j, built incrementally
      f1 *= cplx(0, -alpha) * (static_cast<double>(n - j) / j);
      e1[j] = f1;
      f2 *= cplx(0, beta) * (static_cast<double>(n + j) / j);
      e2[j] = f2;
    }
    for (int j = 0; j <= kOrder; ++j)
      for (int k2 = 0; j + k2 <= kOrder; ++k2) P[j + k2] += e1[j] * e2[k2];
  }
  cplx D[kOrder + 1] = {};
  {
    cplx z(0, -(c - 1));
    cplx p = z;
    for (int r = 1; r <= kOrder; ++r) {
      D[r] = (r % 2 == 1 ? p : -p) / static_cast<double>(r);
      p *= z;
    }
  }
  double lnT = std::log(T0);
  auto int_pow = [&](int m) { return std::pow(T0, 1.0 - m) / (m - 1); };
  auto int_pow_log = [&](int m) {
    return std::pow(T0, 1.0 - m) * (lnT * (m - 1) + 1) / ((m - 1.0) * (m - 1.0));
  };
  cplx total(0, 0);
  for (int j = 0; j <= kOrder; ++j) {
    total -= P[j] * (cplx(int_pow_log(j + 2), 0) + cplx(0, kPi / 2) * cplx(int_pow(j + 2), 0));
    for (int r = 1; j + r <= kOrder; ++r)
      total -= D[r] * P[j] * cplx(int_pow(j + r + 2), 0);
  }
  return 2 * total.real();
}

struct PanelSum {
  double value = 0;
  Real err{0};
  long evals = 0;
};

PanelSum integrate_panels(const std::function<Real(const Real&)>& f, double T0, long npanels,
                          double tol, int levels) {
  PanelSum out;
  Real panel_tol(tol / static_cast<double>(2 * npanels));
  QuadHints hints;
  hints.max_level = levels;
  Real acc(0);
  for (long k = 0; k < npanels; ++k) {
    double lo = T0 * static_cast<double>(k) / npanels;
    double hi = T0 * static_cast<double>(k + 1) / npanels;
    QuadResult r = quad_adaptive(f, Real(lo), Real(hi), panel_tol, hints);
    acc += r.value;
    out.err += r.err_estimate;
    out.evals += r.evaluations;
  }
  out.value = acc.to_double();
  return out;
}

CoeffResult assemble_contour(long n, double b, double c, double tol, const VonMangoldtTable& table,
                             std::uint64_t prime_limit, bool shifted) {
  if (n < 1) throw domain_error("contour route: requires n >= 1");
  if (!(c > 1.0 && c < b + 1.0))
    throw domain_error("contour route: abscissa must satisfy 1 < c < b + 1");
  const long npanels = static_cast<long>(
      std::ceil(std::max({100.0, 6.0 * (c + b), 2.5 * n * (2 * b + 1)}) / kLn2HalfPeriod));
  const double T0 = npanels * kLn2HalfPeriod;

  ZetaLineEM line(c, T0 + 2);
  Kernel ker{n, c + b, c - b - 1};
  auto f = [&](const Real& t_r) -> Real {
    double t = t_r.to_double();
    cplx lz = line.ln_zeta(t);
    if (shifted) lz += cplx(0.5 * std::log((c - 1) * (c - 1) + t * t), std::atan2(t, c - 1));
    return Real(2 * (lz * ker.at(t)).real());
  };
  PanelSum panels = integrate_panels(f, T0, npanels, tol, 9);

  // the prime-series representation drives only the oscillatory tail
  ZetaLinePrimes tail_line(c, table, std::min<std::uint64_t>(prime_limit, table.limit));
  double rem_bound = 0;
  double tail = oscillatory_tail(tail_line, ker, T0, rem_bound);
  if (shifted) tail += log_factor_tail(n, b, c, T0);

  const double scale = -static_cast<double>(n) / (2 * kPi);
  Real value = Real(scale) * (Real(panels.value) + Real(tail));
  Real err = Real(std::abs(scale)) * (panels.err + Real(rem_bound)) +
             Real(std::abs(scale) * 2e-12 * (1 + std::abs(panels.value)));

  CoeffResult r;
  r.request = {n, b, Route::Contour, {}, working_digits()};
  r.request.trunc.quad_tol = tol;
  r.request.trunc.abscissa_c = c;
  r.request.trunc.sieve_limit = tail_line.m_limit();
  r.value = value;
  r.k_value = Real(n) * Real(2 * b + 1) * value;
  r.err = err;
  r.terms_used = panels.evals;
  return r;
}

}  // namespace

double contour_abscissa(double b) {
  double c = 1 + 0.45 * std::min(1.0, b);
  return std::min(c, (b + 2) / 2);
}

CoeffResult d_zeta_contour(long n, double b, double c, double tol, const VonMangoldtTable& table,
                           std::uint64_t prime_limit) {
  if (c == 0) c = contour_abscissa(b);
  return assemble_contour(n, b, c, tol, table, prime_limit, false);
}

CoeffResult d_shifted_contour(long n, double b, double c, double tol,
                              const VonMangoldtTable& table, std::uint64_t prime_limit) {
  if (c == 0) c = contour_abscissa(b);
  return assemble_contour(n, b, c, tol, table, prime_limit, true);
}

std::complex<double> contour_integrand(long n, double b, double c, double t,
                                       const VonMangoldtTable& table, std::uint64_t prime_limit) {
  ZetaLinePrimes line(c, table, prime_limit);
  Kernel ker{n, c + b, c - b - 1};
  return line.ln_zeta(t) * ker.at(t);
}

CoeffResult d_xi_route_c(long n, double b, const VonMangoldtTable& table,
                         const Truncation& trunc) {
  double c = trunc.abscissa_c != 0 ? trunc.abscissa_c : contour_abscissa(b);
  CoeffResult zpart = d_zeta_contour(n, b, c, trunc.quad_tol, table,
                                     std::min<std::uint64_t>(trunc.sieve_limit, 2000000));
  Real tzs_err;
  Real s_inf = trivial_zero_sum_inf(n, b, &tzs_err);
  Real cc(2 * b + 1);
  Real value = -s_inf / cc + Real(n) / 2 * digamma(Real((b + 1) / 2)) + Real(n) / Real(b + 1) -
               Real(n) * log(const_pi()) / 2 + d_pole_term(n, b) + zpart.value;
  CoeffResult r;
  r.request = zpart.request;
  r.request.route = Route::Contour;
  r.value = value;
  r.k_value = Real(n) * cc * value;
  r.err = zpart.err + tzs_err / cc;
  r.terms_used = zpart.terms_used;
  return r;
}

}  // namespace genli
