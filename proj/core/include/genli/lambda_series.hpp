#pragma once

#include <span>

#include "genli/sieve.hpp"

namespace genli {

// Shared engine behind the xi-decomposition and arithmetic routes:
//
//   Z_n(b) = -( sum_{m <= M} Lambda(m) m^{-(b+1)} L^1_{n-1}((2b+1) ln m)
//               + int_M^inf x^{-(b+1)} L^1_{n-1}((2b+1) ln x) dx ).
//
// The integral is the prime-density first-order model of the discarded tail;
// adding it leaves only the prime-counting fluctuation, which the doubling
// criterion measures.  M climbs a doubling ladder from m_start until the
// checkpoint-to-checkpoint change is within tol or the table is exhausted.
struct LambdaSeries {
  std::vector<Real> value;     // per requested n, at the converged checkpoint
  std::vector<Real> delta;     // last doubling delta per n (heuristic tail)
  std::vector<char> converged;
  std::uint64_t m_used = 0;    // largest checkpoint reached
  long terms = 0;
};

LambdaSeries lambda_laguerre_series(std::span<const long> n_list, double b,
                                    const VonMangoldtTable& table, const Real& tol,
                                    std::uint64_t m_start);

// Closed form of the smooth tail integral above, via
// int_Y^inf e^{-q y} y^i dy = (i!/q^{i+1}) e^{-qY} sum_{r<=i} (qY)^r / r!.
Real lambda_smooth_tail(long n, double b, std::uint64_t M);

}  // namespace genli
