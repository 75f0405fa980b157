#include "genli/licore.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "genli/quad.hpp"
#include "genli/special.hpp"

namespace genli {

std::string to_string(Route r) {
  switch (r) {
    case Route::ZeroSum: return "ZeroSum";
    case Route::XiDecomp: return "XiDecomp";
    case Route::Contour: return "Contour";
    case Route::Arithmetic: return "Arithmetic";
  }
  return "?";
}

std::optional<Route> route_from_string(std::string_view s) {
  if (s == "ZeroSum") return Route::ZeroSum;
  if (s == "XiDecomp") return Route::XiDecomp;
  if (s == "Contour") return Route::Contour;
  if (s == "Arithmetic") return Route::Arithmetic;
  return std::nullopt;
}

ZeroPhase zero_phase(double T, double b) {
  ZeroPhase z;
  z.T = T;
  Real c(2 * b + 1);
  Real t(T);
  z.theta = Real(-2) * atan(c / (Real(2) * t));
  Real denom = t * t + c * c / 4;
  z.sin_theta = -(c * t) / denom;
  z.cos_theta = (t * t - c * c / 4) / denom;
  return z;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// chunked Kahan over k = 0..count-1 of term(k); chunk partials combined in
// index order, so the value is independent of how chunks are produced
double kahan_chunked(long count, const std::function<double(long)>& term) {
  constexpr long kChunk = 4096;
  double total = 0, tcomp = 0;
  for (long lo = 0; lo < count; lo += kChunk) {
    long hi = std::min(count, lo + kChunk);
    double s = 0, comp = 0;
    for (long k = lo; k < hi; ++k) {
      double y = term(k) - comp;
      double t = s + y;
      comp = (t - s) - y;
      s = t;
    }
    double y = s - tcomp;
    double t = total + y;
    tcomp = (t - total) - y;
    total = t;
  }
  return total;
}

// Smooth zero-density tail of the paired sums beyond t_max, in the phase
// variable phi = atan((2b+1)/(2T)):
//   integral over (0, phimax] of
//     [4 sin^2(n phi) c/(2 sin^2 phi) (+ 2 n c for the eq.(22) regularizer)]
//     * (1/2pi) ln(c / (4 pi tan(phi)))  d phi.
Real zero_tail_model(long n, double b, double tmax, bool with_regularizer) {
  Real c(2 * b + 1);
  Real phimax = atan(c / Real(2 * tmax));
  Real tol = Real(n) * Real(n) * c * c / Real(tmax) * Real("1e-15");
  auto f = [&](const Real& phi) {
    Real s = sin(phi);
    Real dens = log(c / (Real(4) * const_pi() * tan(phi))) / (Real(2) * const_pi());
    Real snp = sin(Real(n) * phi);
    Real val = Real(4) * snp * snp * c / (Real(2) * s * s);
    if (with_regularizer) val += Real(2 * n) * c;
    return val * dens;
  };
  return quad_adaptive(f, Real(0), phimax, tol).value;
}

// Residual bound for replacing the true zero counting measure by its smooth
// main term above t_max: |N - N_model| stays below ~5 there (7/8 + Trudgian's
// S(T) bound; the slow log growth beyond is absorbed by the slack), and the
// integrated variation of the summand adds the same factor again.
double fluctuation_bound(long n, double b, double tmax) {
  double c = 2 * b + 1;
  double phimax = std::atan(c / (2 * tmax));
  double g = 4 * std::pow(std::sin(std::min(n * phimax, 1.5707963)), 2);
  if (n * phimax < 1.4) return 10 * g;
  return 5.0 * (g + 4 * (2 * n * phimax / 3.14159265 + 1));
}

}  // namespace

Real d1_anchor(double b, const VonMangoldtTable& table) {
  if (!(b > 0)) throw domain_error("d1_anchor: requires b > 0");
  LambdaPart zld = d_zeta_laguerre(1, b, table, Real(1e-12), table.limit);
  return Real(1) / Real(1 + b) + Real(1) / Real(b) - log(const_pi()) / 2 +
         digamma(Real((1 + b) / 2)) / 2 + zld.value;
}

CoeffResult k_sum_zeros(long n, double b, const ZeroTable& zeros) {
  if (n < 1) throw domain_error("k_sum_zeros: requires n >= 1");
  if (!(b > -0.5)) throw domain_error("k_sum_zeros: requires b > -1/2");
  if (zeros.ordinates.empty()) throw domain_error("k_sum_zeros: empty zero table");
  const double c = 2 * b + 1;
  double raw = kahan_chunked(zeros.count(), [&](long k) {
    double s = std::sin(static_cast<double>(n) * std::atan(c / (2 * zeros.ordinates[k])));
    return 4 * s * s;
  });
  Real k_val = Real(raw) + zero_tail_model(n, b, zeros.t_max(), false);

  double err_fluct = fluctuation_bound(n, b, zeros.t_max());
  double err_ord = 2 * n * c * zeros.ordinate_eps * zeros.sum_inv_sq();
  double err_fp = 4e-16 * static_cast<double>(zeros.count());

  CoeffResult r;
  r.request = {n, b, Route::ZeroSum, {}, working_digits()};
  r.request.trunc.zero_count = zeros.count();
  r.k_value = k_val;
  r.value = k_val / Real(n * c);
  r.err = Real(err_fluct + err_ord + err_fp) / Real(n * c);
  r.terms_used = zeros.count();
  return r;
}

namespace {

// summand of the trivial-zero sum and its first/third derivatives in the
// continuous variable x; u = (2b+1)/(2x+b+1)
struct TzsDerivs {
  Real f, f1, f3;
};

Real tzs_pow(const Real& base, long n) { return pow(base, n); }

TzsDerivs tzs_summand(long n, double b, const Real& x) {
  Real c(2 * b + 1);
  Real u = c / (Real(2) * x + Real(b) + Real(1));
  Real h = Real(1) - u;
  Real hn1 = tzs_pow(h, n - 1);
  TzsDerivs d;
  d.f = Real(1) - hn1 * h - Real(n) * u;
  Real u1 = Real(-2) * u * u / c;
  Real u2 = Real(8) * u * u * u / (c * c);
  Real u3 = Real(-48) * u * u * u * u / (c * c * c);
  Real g = hn1 - Real(1);
  d.f1 = Real(n) * u1 * g;
  Real hn2 = n >= 2 ? tzs_pow(h, n - 2) : Real(0);
  Real hn3 = n >= 3 ? tzs_pow(h, n - 3) : Real(0);
  d.f3 = Real(n) * (u3 * g) - Real(3 * n) * Real(n - 1) * hn2 * u1 * u2 +
         Real(n) * Real(n - 1) * Real(n - 2) * hn3 * u1 * u1 * u1;
  return d;
}

}  // namespace

TailSum trivial_zero_sum(long n, double b, long K) {
  if (n < 1) throw domain_error("trivial_zero_sum: requires n >= 1");
  if (!(b > -0.5)) throw domain_error("trivial_zero_sum: requires b > -1/2");
  TailSum out;
  if (n == 1) {  // summand identically zero
    out.value = Real(0);
    out.tail = Real(0);
    out.err = Real(0);
    out.terms = 0;
    return out;
  }
  const double c = 2 * b + 1;
  if (K <= 0) K = std::max<long>(64, static_cast<long>(4.0 * n * c) + 64);
  Real cr(c);
  SumAccumulator acc;
  for (long k = 1; k <= K; ++k) {
    Real u = cr / Real(2 * k + b + 1);
    Real term;
    if (u < Real(1)) {
      term = -(expm1(Real(n) * log1p(-u))) - Real(n) * u;
    } else {
      term = Real(1) - pow(Real(1) - u, n) - Real(n) * u;
    }
    acc.feed(std::move(term));
  }
  out.value = acc.total();
  out.terms = K;

  // Euler-Maclaurin from K+1: sum_{k>K} f = int_{K+1}^inf f + f/2 - f'/12 + f'''/720 ...
  Real a(static_cast<double>(K + 1));
  Real u_a = cr / (Real(2) * a + Real(b) + Real(1));
  // W = ((2b+1)/2) * int_0^{u(a)} (1-(1-u)^n - n u)/u^2 du
  auto integrand = [&](const Real& u) {
    Real g;
    if (Real(n) * u < Real("1e-14")) {
      // f/u^2 = -C(n,2) + C(n,3) u - ...; truncation error O((nu)^2) relative
      g = -(Real(n) * Real(n - 1) / 2) + Real(n) * Real(n - 1) * Real(n - 2) / 6 * u;
    } else {
      g = (-(expm1(Real(n) * log1p(-u))) - Real(n) * u) / (u * u);
    }
    return g;
  };
  Real qtol = Real(n) * Real(n) * u_a * Real("1e-25");
  Real W = cr / 2 * quad_adaptive(integrand, Real(0), u_a, qtol).value;
  TzsDerivs d = tzs_summand(n, b, a);
  out.tail = W + d.f / 2 - d.f1 / 12 + d.f3 / 720;
  out.err = abs(d.f3 / 720) / 4 + abs(qtol) * cr;
  return out;
}

Real trivial_zero_sum_inf(long n, double b, Real* err) {
  TailSum t = trivial_zero_sum(n, b);
  if (err) *err = t.err;
  return t.value + t.tail;
}

Real d_gamma_term(long n, double b) {
  if (!(b > -0.5)) throw domain_error("d_gamma_term: requires b > -1/2");
  Real s_inf = trivial_zero_sum_inf(n, b);
  return -s_inf / Real(2 * b + 1) + Real(n) / 2 * digamma(Real((b + 1) / 2)) +
         Real(n) / Real(b + 1);
}

Real d_pole_term(long n, double b) {
  if (b == 0) throw domain_error("d_pole_term: singular at b = 0");
  if (!(b > -0.5)) throw domain_error("d_pole_term: requires b > -1/2");
  Real ratio = Real(1) + Real(1) / Real(b);
  Real p = pow(ratio, n);
  return (Real(1) + (n % 2 == 0 ? -p : p)) / Real(2 * b + 1);
}

PrecisionPlan plan_precision(long n, double b, std::uint64_t M, double tol) {
  PrecisionPlan plan;
  double Y = (2 * b + 1) * std::log(static_cast<double>(M));
  // envelope of the m-term at M: oscillatory |L^1| <= n e^{y/2} versus the
  // monomial regime n y^{n-1}/(n-1)!
  double log_env = std::log(static_cast<double>(n)) +
                   std::min(Y / 2, (n - 1) * std::log(Y) - std::lgamma(static_cast<double>(n)));
  double log_fluct =
      log_env - (b + 1) * std::log(static_cast<double>(M)) + 0.5 * std::log(static_cast<double>(M));
  plan.est_fluctuation = std::exp(std::min(600.0, log_fluct));
  plan.feasible = plan.est_fluctuation <= tol;
  double log_pole = b > 0 ? n * std::log1p(1.0 / b) - std::log(2 * b + 1) : 0.0;
  plan.max_magnitude = std::exp(std::min(600.0, std::max(std::log(0.8 * n), log_pole)));
  double extra = std::log10(std::max(1.0, plan.max_magnitude) / tol);
  plan.digits = 16 + static_cast<long>(std::ceil(std::max(0.0, extra)));
  return plan;
}

namespace {
std::mutex g_lambda_cache_mu;
std::map<std::string, LambdaPart> g_lambda_cache;
}  // namespace

LambdaPart d_zeta_laguerre(long n, double b, const VonMangoldtTable& table, const Real& tol,
                           std::uint64_t m_start) {
  if (n < 1) throw domain_error("d_zeta_laguerre: requires n >= 1");
  if (!(b > 0)) throw domain_error("d_zeta_laguerre: requires b > 0");
  if (m_start == 0) m_start = table.limit;
  m_start = std::min(m_start, table.limit);
  PrecisionPlan plan = plan_precision(n, b, table.limit, tol.to_double());
  long digits = std::max(working_digits(), plan.digits);

  char keybuf[160];
  std::snprintf(keybuf, sizeof(keybuf), "%ld|%.17g|%llu|%llu|%ld|%s", n, b,
                static_cast<unsigned long long>(m_start),
                static_cast<unsigned long long>(table.limit), digits, tol.str(8).c_str());
  std::string key(keybuf);
  {
    std::lock_guard<std::mutex> lock(g_lambda_cache_mu);
    auto it = g_lambda_cache.find(key);
    if (it != g_lambda_cache.end()) return it->second;
  }

  LambdaPart part;
  {
    PrecisionGuard guard(digits);
    long nl[1] = {n};
    LambdaSeries s = lambda_laguerre_series(nl, b, table, tol, m_start);
    part.value = s.value[0];
    part.terms = s.terms;
    part.m_used = s.m_used;
    part.feasible = s.converged[0] != 0;
    PrecisionPlan at_used = plan_precision(n, b, s.m_used, tol.to_double());
    part.err = max(s.delta[0], Real(at_used.est_fluctuation));
  }
  std::lock_guard<std::mutex> lock(g_lambda_cache_mu);
  g_lambda_cache.emplace(key, part);
  return part;
}

CoeffResult d_xi_route_b(long n, double b, const VonMangoldtTable& table,
                         const Truncation& trunc) {
  if (!(b > 0)) throw domain_error("d_xi_route_b: requires b > 0");
  Real tol(1e-3);  // doubling-criterion target for the Lambda ladder
  LambdaPart zpart = d_zeta_laguerre(n, b, table, tol, trunc.sieve_limit);
  Real tzs_err;
  Real s_inf = trivial_zero_sum_inf(n, b, &tzs_err);
  Real c(2 * b + 1);
  Real value = -s_inf / c + Real(n) / 2 * digamma(Real((b + 1) / 2)) + Real(n) / Real(b + 1) -
               Real(n) * log(const_pi()) / 2 + d_pole_term(n, b) + zpart.value;
  CoeffResult r;
  r.request = {n, b, Route::XiDecomp, trunc, working_digits()};
  r.value = value;
  r.k_value = Real(n) * c * value;
  r.err = zpart.err + tzs_err / c;
  r.terms_used = zpart.terms;
  r.status = zpart.feasible ? "ok" : "infeasible";
  return r;
}

CoeffResult k_route_arithmetic(long n, double b, const VonMangoldtTable& table,
                               const Truncation& trunc) {
  if (!(b > 0)) throw domain_error("k_route_arithmetic: requires a = b + 1 > 1");
  const double a = b + 1;
  Real tol(1e-3);
  LambdaPart zpart = d_zeta_laguerre(n, b, table, tol, trunc.sieve_limit);
  Real ra(a);
  Real two_a1 = Real(2) * ra - Real(1);  // = 2b+1
  Real k = Real(2) - pow(Real(-1) + Real(1) / ra, n) - pow(Real(-1) - Real(1) / (ra - Real(1)), n);
  k += two_a1 * zpart.value;  // Lambda part, summed m-first through the Laguerre kernel
  k += Real(n) / 2 * two_a1 * (digamma(ra / 2) - log(const_pi()));
  SumAccumulator hur;
  for (long j = 2; j <= n; ++j) {
    Real term = binomial(n, j) * pow(two_a1 / 2, j) * hurwitz_zeta_int(j, ra / 2);
    hur.feed(j % 2 == 0 ? term : -term);
  }
  k += hur.total();
  CoeffResult r;
  r.request = {n, b, Route::Arithmetic, trunc, working_digits()};
  r.k_value = k;
  r.value = k / (Real(n) * two_a1);
  r.err = zpart.err + abs(k) * working_eps() * Real(100);
  r.terms_used = zpart.terms;
  r.status = zpart.feasible ? "ok" : "infeasible";
  return r;
}

CoeffResult d_shifted(long n, double b, const ZeroTable& zeros, const VonMangoldtTable& table,
                      const Truncation& trunc) {
  (void)table;
  if (!(b > 0)) throw domain_error("d_shifted: requires b > 0");
  CoeffResult A = k_sum_zeros(n, b, zeros);
  Real tzs_err;
  Real s_inf = trivial_zero_sum_inf(n, b, &tzs_err);
  Real c(2 * b + 1);
  Real value = A.value + s_inf / c - Real(n) / 2 * digamma(Real((b + 1) / 2)) -
               Real(n) / Real(b + 1) + Real(n) * log(const_pi()) / 2;
  CoeffResult r;
  r.request = {n, b, Route::ZeroSum, trunc, working_digits()};
  r.value = value;
  r.k_value = Real(n) * c * value;
  r.err = A.err + tzs_err / c;
  r.terms_used = A.terms_used;
  return r;
}

ShiftedPaths d_shifted_paths(long n, double b, const ZeroTable& zeros,
                             const VonMangoldtTable& table, const Truncation& trunc) {
  ShiftedPaths out;
  out.stable = d_shifted(n, b, zeros, table, trunc);
  Real tol(1e-3);
  PrecisionPlan plan = plan_precision(n, b, table.limit, tol.to_double());
  if (plan.feasible) {
    LambdaPart zpart = d_zeta_laguerre(n, b, table, tol, trunc.sieve_limit);
    CoeffResult u;
    u.request = {n, b, Route::XiDecomp, trunc, working_digits()};
    u.value = d_pole_term(n, b) + zpart.value;
    u.k_value = Real(n) * Real(2 * b + 1) * u.value;
    u.err = zpart.err;
    u.terms_used = zpart.terms;
    u.status = zpart.feasible ? "ok" : "infeasible";
    out.diff = abs(out.stable.value - u.value);
    out.agree = out.diff <= out.stable.err + u.err + Real("1e-9");
    out.unstable = std::move(u);
  }
  return out;
}

BoundReport verify_eq22(long n, double b, const ZeroTable& zeros, const VonMangoldtTable& table,
                        const Truncation& trunc) {
  if (!(b > 0)) throw domain_error("verify_eq22: requires b > 0");
  CoeffResult lhs = d_shifted(n, b, zeros, table, trunc);

  const double c = 2 * b + 1;
  double raw = kahan_chunked(zeros.count(), [&](long k) {
    double T = zeros.ordinates[k];
    double s = std::sin(static_cast<double>(n) * std::atan(c / (2 * T)));
    return 4 * s * s + n * c * c / (T * T + c * c / 4);
  });
  Real zero_part = Real(raw) + zero_tail_model(n, b, zeros.t_max(), true);
  Real tzs_err;
  Real s_inf = trivial_zero_sum_inf(n, b, &tzs_err);

  // n zeta'/zeta(b+1) through the tail-corrected Lambda engine (n = 1 kernel)
  LambdaPart zld = d_zeta_laguerre(1, b, table, Real(1e-10), trunc.sieve_limit);
  Real rhs = zero_part / Real(c) + s_inf / Real(c) + Real(n) * zld.value + Real(n) / Real(b + 1);

  double fluct = fluctuation_bound(n, b, zeros.t_max()) +
                 10 * n * c * c / (zeros.t_max() * zeros.t_max());
  Real rhs_err = Real(fluct) / Real(c) + tzs_err / Real(c) + Real(n) * zld.err;

  BoundReport rep;
  rep.name = "eq22";
  rep.inputs = {{"n", std::to_string(n)},
                {"b", Real(b).str(6)},
                {"zeros", std::to_string(zeros.count())},
                {"M", std::to_string(table.limit)}};
  rep.lhs = lhs.value;
  rep.rhs = rhs;
  Real budget = lhs.err + rhs_err + Real("1e-8");
  rep.slack = budget - abs(lhs.value - rhs);
  rep.pass = rep.slack >= Real(0);
  rep.note = "combined error budget " + budget.str(3);
  return rep;
}

}  // namespace genli
