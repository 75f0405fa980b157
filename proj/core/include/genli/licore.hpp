#pragma once

#include <optional>

#include "genli/lambda_series.hpp"
#include "genli/report.hpp"
#include "genli/sieve.hpp"
#include "genli/zeros.hpp"

namespace genli {

// The four evaluation routes for the generalized Li coefficient D_n(b),
// the n-th derivative coefficient of (z+b)^{n-1} ln xi(z) at z = 1+b.
// Convention (pinned by the n = 1 anchor and verified in the tests):
//   k_{n,b} = sum_rho (1 - ((rho+b)/(rho-1-b))^n) = n (2b+1) D_n(b).
enum class Route { ZeroSum, XiDecomp, Contour, Arithmetic };

std::string to_string(Route r);
std::optional<Route> route_from_string(std::string_view s);

struct Truncation {
  long zero_count = 100000;            // route A: zeros consumed from the table
  std::uint64_t sieve_limit = 10000000;  // routes B/D: requested prime limit
  double quad_tol = 1e-9;              // route C quadrature tolerance
  double abscissa_c = 0;               // route C; 0 selects the balance rule
};

struct CoeffRequest {
  long n = 1;
  double b = 1;
  Route route = Route::ZeroSum;
  Truncation trunc;
  long precision = 60;
};

struct CoeffResult {
  CoeffRequest request;
  Real value;    // D_n(b)
  Real k_value;  // n (2b+1) D_n(b)
  Real err;      // absolute estimate; rigorous for route A, heuristic for B/C/D
  long terms_used = 0;
  std::string status = "ok";  // "ok" or "infeasible"
};

// Phase of (rho+b)/(rho-1-b) on the critical line: theta(T) = -2 atan((2b+1)/(2T)),
// so that each conjugate pair contributes 2(1 - cos(n theta)) = 4 sin^2(n atan(...)).
struct ZeroPhase {
  double T;
  Real theta;
  Real sin_theta;
  Real cos_theta;
};
ZeroPhase zero_phase(double T, double b);

// --- n = 1 anchor -----------------------------------------------------------

// xi'/xi(1+b) = 1/(1+b) + 1/b - (ln pi)/2 + psi((1+b)/2)/2 + zeta'/zeta(1+b),
// the n = 1 coefficient.  The zeta'/zeta value comes from the tail-corrected
// Lambda series, so small b is fine.
Real d1_anchor(double b, const VonMangoldtTable& table);

// --- route A: zero sum -------------------------------------------------------

// k = sum over stored zeros of 4 sin^2(n atan((2b+1)/(2 T_k))) plus the smooth
// zero-density tail integral beyond t_max; err bounds the density-fluctuation
// residual (|N - N_model| <= ~5 near t_max, Trudgian-flavoured), the ordinate
// perturbation, and the fp accumulation.
CoeffResult k_sum_zeros(long n, double b, const ZeroTable& zeros);

// --- trivial-zero sum and the gamma/pole terms -------------------------------

struct TailSum {
  Real value;  // partial sum through K
  Real tail;   // Euler-Maclaurin estimate of the remainder
  Real err;    // heuristic accuracy of the tail
  long terms = 0;
};

// S_K = sum_{k=1}^{K} [1 - ((2k-b)/(2k+b+1))^n - n(2b+1)/(2k+b+1)]; K = 0
// picks K automatically.  value+tail approximates S_infinity.
TailSum trivial_zero_sum(long n, double b, long K = 0);
Real trivial_zero_sum_inf(long n, double b, Real* err = nullptr);

// -(1/(2b+1)) S_inf + (n/2) psi((b+1)/2) + n/(b+1)
Real d_gamma_term(long n, double b);

// (1/(2b+1)) (1 + (-1)^{n+1} (1+1/b)^n); singular at b = 0.
Real d_pole_term(long n, double b);

// --- route B: xi decomposition with the Laguerre series ----------------------

struct LambdaPart {
  Real value;
  Real err;
  long terms = 0;
  std::uint64_t m_used = 0;
  bool feasible = true;
};

struct PrecisionPlan {
  long digits = 0;
  bool feasible = true;
  double est_fluctuation = 0;  // heuristic prime-fluctuation error at M
  double max_magnitude = 0;    // worst intermediate scale
};

// Required working digits and feasibility for the Lambda series at (n, b, M, tol).
PrecisionPlan plan_precision(long n, double b, std::uint64_t M, double tol);

// Z_n(b): the zeta part of the decomposition, at the precision the plan asks for.
LambdaPart d_zeta_laguerre(long n, double b, const VonMangoldtTable& table, const Real& tol,
                           std::uint64_t m_start = 0);

CoeffResult d_xi_route_b(long n, double b, const VonMangoldtTable& table,
                         const Truncation& trunc = {});

// --- route D: arithmetic interpretation --------------------------------------

CoeffResult k_route_arithmetic(long n, double b, const VonMangoldtTable& table,
                               const Truncation& trunc = {});

// --- shifted coefficient (z-1) zeta(z) ---------------------------------------

// Stable path: D_n(b) from route A plus the rearranged gamma/pi terms.
CoeffResult d_shifted(long n, double b, const ZeroTable& zeros, const VonMangoldtTable& table,
                      const Truncation& trunc = {});

struct ShiftedPaths {
  CoeffResult stable;
  std::optional<CoeffResult> unstable;  // d_pole_term + d_zeta_laguerre when feasible
  Real diff;                            // |stable - unstable| when both exist
  bool agree = false;                   // within combined errors
};
ShiftedPaths d_shifted_paths(long n, double b, const ZeroTable& zeros,
                             const VonMangoldtTable& table, const Truncation& trunc = {});

// --- direct zeta decomposition check ------------------------------------------

// Both sides of the regularized zero-sum identity for the shifted coefficient:
// left = stable path, right = paired zero sum + trivial-zero sum +
// n zeta'/zeta(b+1) + n/(b+1), the pairing chosen so the sum converges
// absolutely (each pair's regularizer decays like 1/T^2).
BoundReport verify_eq22(long n, double b, const ZeroTable& zeros, const VonMangoldtTable& table,
                        const Truncation& trunc = {});

}  // namespace genli
