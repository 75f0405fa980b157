#pragma once

#include <functional>

#include "genli/real.hpp"

namespace genli {

struct QuadResult {
  Real value;
  Real err_estimate;  // absolute, heuristic (nested-rule difference)
  long evaluations = 0;
};

struct QuadHints {
  double period = 0;       // > 0: oscillatory tail; split at half-period boundaries
  double decay_scale = 1;  // characteristic x-scale of decay for semi-infinite maps
  int max_level = 11;      // tanh-sinh / exp-sinh refinement cap
  long max_panels = 512;   // bisection or oscillatory panel cap
};

using Integrand = std::function<Real(const Real&)>;

// Finite interval, tanh-sinh panels with adaptive bisection.  Tolerances are
// absolute.  Integrable endpoint singularities are fine: abscissas are
// generated from their distance to the endpoint, never by subtraction.
QuadResult quad_adaptive(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                         const QuadHints& hints = {});

// Semi-infinite [a, inf).  Non-oscillatory integrands go through an exp-sinh
// map scaled by hints.decay_scale; when hints.period > 0 the integral is
// summed over half-period panels and the alternating partial sums are
// accelerated with the Wynn epsilon algorithm.
QuadResult quad_to_inf(const Integrand& f, const Real& a, const Real& tol,
                       const QuadHints& hints = {});

// Wynn epsilon extrapolation of a sequence of partial sums; returns the best
// even-column estimate.  Exposed for the oscillatory drivers and their tests.
Real wynn_epsilon(std::span<const Real> partial_sums);

}  // namespace genli
