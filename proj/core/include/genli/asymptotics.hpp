#pragma once

#include "genli/licore.hpp"
#include "genli/report.hpp"

namespace genli {

// (|2b+1|/2) n ln n + (|2b+1|/2)(gamma - 1 - ln(2pi/|2b+1|)) n
Real li_asymptotic(long n, double b);

// n (psi(n) + gamma - 1) + 1, the closed form of
// int_0^1 ((1-y)^n - 1 + n y) / y^2 dy.
Real lemma2_core_closed(long n);
// quadrature of the integral against the closed form
BoundReport lemma2_core_check(long n);

// integral sandwich for S = sum_k [(1 - (2b+1)/(2k+b+1))^n - 1 + n(2b+1)/(2k+b+1)]
BoundReport lemma2_sandwich(long n, double b);

// I = int ((2b)^2+t^2)^{(n-1)/2} (1+t^2)^{-(n+1)/2} dt <= (2b/(4b^2-1)) (2b)^{n+1},
// with the extra factor 2b at n = 1 (odd-case reduction).
BoundReport lemma3_bound(long n, double b);

// quadrature of int_0^inf e^{-qx} L^1_{n-1}(x) dx against 1 - (1-1/q)^n
BoundReport laguerre_exp_identity(double q, long n);

struct PositivityScan {
  struct Row {
    double b;
    bool all_positive;
    Real min_value;  // min over n of D_n(b)
  };
  std::vector<Row> rows;
  double smallest_passing_b = 0;
  bool any_pass = false;
  // at the largest grid b, n = m_max:
  Real convergence_ratio;  // D_n(b) / ((n/2) psi((b+1)/2))
  Real dominance_ratio;    // (n/2) psi((b+1)/2) / |D_n(b) - (n/2) psi((b+1)/2)|
};

PositivityScan positivity_scan(long m_max, std::span<const double> b_grid,
                               const ZeroTable& zeros);

// d_shifted(n,b) + (1-eps)(n/2) ln n; pass records that the report was
// produced with finite values, the sign lives in the note.
BoundReport proposition1_margin(long n, double b, double eps, const ZeroTable& zeros,
                                const VonMangoldtTable& table);

// Exponential pole term against the compensated shifted coefficient, checked
// against the asymptotic band that Lemma 2 and the zero-sum asymptotic give
// for the stable path (the published display drops the -(n/2) ln n part; the
// consistent band is used here).
BoundReport compensation_report(long n, double b, const ZeroTable& zeros,
                                const VonMangoldtTable& table);

// Smooth-density model of the zero sum through the Chebyshev kernel.
Real chebyshev_model_sum(long n, double b);
// change-of-variables agreement between the T-form and the x-form
BoundReport chebyshev_change_of_variables(long n, double b, double tol);
// model against the zero-sum route
BoundReport chebyshev_model_check(long n, double b, const ZeroTable& zeros, double rel_band);

// residual of the zero-sum asymptotic: r_n = (k_{n,b} - li_asymptotic)/n
struct Theorem6Residual {
  Real k;
  Real a1;
  Real residual;
  Real tail_bound;  // route-A reported error
};
Theorem6Residual theorem6_residual(long n, double b, const ZeroTable& zeros);

}  // namespace genli
