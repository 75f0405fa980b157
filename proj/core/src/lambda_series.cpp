#include "genli/lambda_series.hpp"

#include <algorithm>

#include "genli/special.hpp"

namespace genli {

Real lambda_smooth_tail(long n, double b, std::uint64_t M) {
  if (!(b > 0)) throw domain_error("lambda_smooth_tail: requires b > 0");
  Real rb(b);
  Real c = Real(2) * rb + Real(1);
  Real q = rb / c;
  Real Y = c * log(Real(static_cast<double>(M)));
  Real qY = q * Y;
  // E_j = sum_{r=0}^{j-1} (qY)^r / r!, extended incrementally over j
  Real Ej(1), pw(1);
  Real total(0);
  Real qinv = Real(1) / q;
  Real qpow = qinv;  // q^{-j}
  for (long j = 1; j <= n; ++j) {
    Real coeff = binomial(n, j) * qpow;
    total += (j % 2 == 1 ? coeff : -coeff) * Ej;
    pw = pw * qY / Real(j);
    Ej += pw;
    qpow *= qinv;
  }
  return exp(-qY) / c * total;
}

LambdaSeries lambda_laguerre_series(std::span<const long> n_list, double b,
                                    const VonMangoldtTable& table, const Real& tol,
                                    std::uint64_t m_start) {
  if (!(b > 0)) throw domain_error("lambda_laguerre_series: requires b > 0");
  if (n_list.empty()) throw domain_error("lambda_laguerre_series: empty n list");
  long n_max = *std::max_element(n_list.begin(), n_list.end());
  if (n_max < 1) throw domain_error("lambda_laguerre_series: requires n >= 1");

  const size_t nn = n_list.size();
  LambdaSeries out;
  out.value.assign(nn, Real(0));
  out.delta.assign(nn, Real(0));
  out.converged.assign(nn, 0);

  // checkpoint ladder: m_start/2 seeds the first delta, then doubling
  std::vector<std::uint64_t> ladder;
  std::uint64_t m0 = std::max<std::uint64_t>(1000, m_start / 2);
  for (std::uint64_t m = m0; m < table.limit; m *= 2) ladder.push_back(m);
  ladder.push_back(table.limit);
  if (ladder.size() < 2)
    ladder.insert(ladder.begin(), std::max<std::uint64_t>(1000, table.limit / 2));

  const Real c = Real(2 * b + 1);
  const Real bp1 = Real(b + 1);
  std::vector<SumAccumulator> acc(nn);
  std::vector<Real> prev_value(nn, Real(0));
  std::vector<char> have_prev(nn, 0);

  size_t li = 0;
  auto checkpoint = [&](std::uint64_t M) {
    for (size_t i = 0; i < nn; ++i) {
      if (out.converged[i]) continue;
      Real corrected = -(acc[i].total() + lambda_smooth_tail(n_list[i], b, M));
      if (have_prev[i]) {
        out.delta[i] = abs(corrected - prev_value[i]);
        out.value[i] = corrected;
        out.m_used = M;
        // accept only at or beyond the requested truncation
        if (M >= m_start && out.delta[i] <= tol) out.converged[i] = 1;
      }
      prev_value[i] = std::move(corrected);
      have_prev[i] = 1;
    }
  };

  // degree recurrence scratch
  std::vector<Real> lag(static_cast<size_t>(n_max), Real(0));
  Real lnm, y, w, next;
  for (const VmEntry& e : table.entries) {
    while (li < ladder.size() && e.m > ladder[li]) {
      checkpoint(ladder[li]);
      ++li;
      if (std::all_of(out.converged.begin(), out.converged.end(), [](char f) { return f != 0; }))
        return out;
    }
    lnm = log(Real(static_cast<double>(e.m)));
    y = c * lnm;
    w = log(Real(static_cast<double>(e.p))) * exp(-(bp1 * lnm));  // Lambda(m) m^{-(b+1)}
    // L^1_0 .. L^1_{n_max-1} at y, accumulated into each requested degree
    lag[0] = Real(1);
    if (n_max > 1) lag[1] = Real(2) - y;
    for (long k = 1; k + 1 < n_max; ++k)
      lag[k + 1] = ((Real(2 * k + 2) - y) * lag[k] - Real(k + 1) * lag[k - 1]) / Real(k + 1);
    for (size_t i = 0; i < nn; ++i)
      if (!out.converged[i]) acc[i].feed(w * lag[static_cast<size_t>(n_list[i] - 1)]);
    ++out.terms;
  }
  while (li < ladder.size()) {
    checkpoint(ladder[li]);
    ++li;
  }
  return out;
}

}  // namespace genli
