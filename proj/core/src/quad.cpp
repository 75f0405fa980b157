#include "genli/quad.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

namespace genli {

namespace {

struct PanelResult {
  Real value;
  Real err;
  bool converged = false;
};

// Node of the tanh-sinh rule at parameter s: weight factor and the distance
// of the abscissa from the nearer endpoint, as a fraction of the half-length.
struct TsNode {
  Real weight;    // (pi/2) cosh(s) / cosh^2((pi/2) sinh(s))
  Real edge;      // 1 - |tanh((pi/2) sinh s)|, computed without cancellation
  int side;       // -1: abscissa below midpoint, +1: above
};

TsNode ts_node(const Real& s) {
  TsNode n;
  Real u = const_pi() / 2 * sinh(s);
  Real au = abs(u);
  Real em = exp(Real(-2) * au);
  Real opem = Real(1) + em;
  n.edge = Real(2) * em / opem;                              // 1 - |tanh(u)|
  n.weight = const_pi() / 2 * cosh(s) * Real(4) * em / (opem * opem);  // cosh(s)/cosh^2(u)
  n.side = s.sign();
  return n;
}

// One tanh-sinh panel on [a, b], refining the step until the level-to-level
// difference is below tol or max_level is hit.
PanelResult tanh_sinh_panel(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                            int max_level, long& evals) {
  const long P = working_digits();
  const Real floor_eps = working_eps();
  const double cutoff_u = 1.3 * static_cast<double>(P) * 2.302585;  // edge cutoff exponent
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  const double U = std::asinh(2.0 / 3.141592653589793 * cutoff_u);

  auto eval_at = [&](const Real& s) -> Real {
    TsNode n = ts_node(s);
    if (n.edge.is_zero()) return Real(0);
    Real x = n.side >= 0 ? b - half * n.edge : a + half * n.edge;
    ++evals;
    return n.weight * f(x);
  };

  // level 0: coarse trapezoid in s with h0 = U/4
  int base = 4;
  Real h = Real(U) / base;
  Real sum = eval_at(Real(0));
  for (int j = 1; j <= base; ++j) sum += eval_at(h * Real(j)) + eval_at(h * Real(-j));
  Real prev = sum * h * half;

  Real value = prev, err = abs(prev) + Real(1);
  long points = base;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    points *= 2;
    Real add(0);
    bool any = false;
    for (long j = 1; j <= points; j += 2) {
      Real spos = h * Real(j), sneg = -spos;
      Real c1 = eval_at(spos), c2 = eval_at(sneg);
      add += c1 + c2;
      if (!c1.is_zero() || !c2.is_zero()) any = true;
    }
    sum += add;
    value = sum * h * half;
    err = abs(value - prev);
    prev = value;
    Real mag_floor = abs(value) * floor_eps * Real(100);
    if (level >= 2 && (err <= tol || err <= mag_floor)) {
      return {value, max(err, mag_floor), true};
    }
    if (!any && level >= 3) break;  // nothing new contributes
  }
  return {value, err, false};
}

}  // namespace

QuadResult quad_adaptive(const Integrand& f, const Real& a, const Real& b, const Real& tol,
                         const QuadHints& hints) {
  if (!(b > a)) {
    if (b == a) return {Real(0), Real(0), 0};
    throw domain_error("quad_adaptive: requires a <= b");
  }
  long evals = 0;
  struct Item {
    Real a, b, tol;
    int depth;
  };
  std::deque<Item> stack{{a, b, tol, 0}};
  Real total(0), toterr(0);
  long panels = 0;
  while (!stack.empty()) {
    Item it = std::move(stack.front());
    stack.pop_front();
    if (++panels > hints.max_panels)
      throw accuracy_error("quad_adaptive: panel budget exhausted", total, toterr);
    PanelResult r = tanh_sinh_panel(f, it.a, it.b, it.tol, hints.max_level, evals);
    if (r.converged || it.depth > 40) {
      if (!r.converged && it.depth > 40)
        throw accuracy_error("quad_adaptive: no convergence after max subdivisions",
                             total + r.value, r.err);
      total += r.value;
      toterr += r.err;
    } else {
      Real mid = (it.a + it.b) / 2;
      stack.push_front({mid, it.b, it.tol / 2, it.depth + 1});
      stack.push_front({it.a, mid, it.tol / 2, it.depth + 1});
    }
  }
  return {total, toterr, evals};
}

Real wynn_epsilon(std::span<const Real> s) {
  // Standard epsilon table; the final entry of the highest even column is the
  // extrapolant.  Tiny denominators mean exact convergence of the tail.
  size_t n = s.size();
  if (n == 0) return Real(0);
  std::vector<Real> prev2(n + 1, Real(0));            // epsilon_{-1}
  std::vector<Real> prev1(s.begin(), s.end());        // epsilon_0
  Real best = prev1.back();
  Real tiny = working_eps() * working_eps();
  for (size_t col = 1; col < n; ++col) {
    std::vector<Real> cur(n - col);
    for (size_t j = 0; j + col < n; ++j) {
      Real diff = prev1[j + 1] - prev1[j];
      if (abs(diff) < tiny) {
        // converged exactly: the even-column neighbour is the answer
        return prev1[j + 1];
      }
      cur[j] = prev2[j + 1] + Real(1) / diff;
    }
    if (col % 2 == 0 && !cur.empty()) best = cur.back();
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return best;
}

namespace {

QuadResult exp_sinh(const Integrand& f, const Real& a, const Real& scale, const Real& tol,
                    int max_level) {
  const long P = working_digits();
  const double U = std::asinh(2.0 / 3.141592653589793 * (1.2 * P * 2.302585));
  long evals = 0;
  Real halfpi = const_pi() / 2;

  auto eval_at = [&](const Real& s) -> Real {
    Real u = halfpi * sinh(s);
    Real g = exp(u);  // x = a + scale * g
    Real w = scale * halfpi * cosh(s) * g;
    if (!w.is_finite() || w.is_zero()) return Real(0);
    ++evals;
    return w * f(a + scale * g);
  };

  int base = 4;
  Real h = Real(U) / base;
  Real sum = eval_at(Real(0));
  for (int j = 1; j <= base; ++j) sum += eval_at(h * Real(j)) + eval_at(h * Real(-j));
  Real prev = sum * h;
  Real value = prev, err = abs(prev) + Real(1);
  long points = base;
  const Real floor_eps = working_eps();
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    points *= 2;
    Real add(0);
    for (long j = 1; j <= points; j += 2) add += eval_at(h * Real(j)) + eval_at(h * Real(-j));
    sum += add;
    value = sum * h;
    err = abs(value - prev);
    prev = value;
    Real mag_floor = abs(value) * floor_eps * Real(100);
    if (level >= 2 && (err <= tol || err <= mag_floor)) return {value, max(err, mag_floor), evals};
  }
  throw accuracy_error("exp_sinh: no convergence at max level", value, err);
}

QuadResult oscillatory_to_inf(const Integrand& f, const Real& a, const Real& tol,
                              const QuadHints& hints) {
  // Half-period panels summed with epsilon acceleration of the partial sums.
  Real L = Real(hints.period) / 2;
  long max_panels = std::min<long>(hints.max_panels, 160);
  std::vector<Real> partials;
  partials.reserve(max_panels);
  Real running(0);
  long evals = 0;
  Real panel_tol = tol / 16;
  Real est_prev(0);
  for (long k = 0; k < max_panels; ++k) {
    Real lo = a + L * Real(k), hi = a + L * Real(k + 1);
    PanelResult r = tanh_sinh_panel(f, lo, hi, panel_tol, hints.max_level, evals);
    if (!r.converged)
      throw accuracy_error("oscillatory quad: panel did not converge", running, r.err);
    running += r.value;
    partials.push_back(running);
    if (partials.size() >= 8 && partials.size() % 2 == 0) {
      Real est = wynn_epsilon(partials);
      Real delta = abs(est - est_prev);
      if (partials.size() > 8 && delta <= tol / 2)
        return {est, max(delta, abs(est) * working_eps() * Real(100)), evals};
      est_prev = est;
    }
  }
  Real est = wynn_epsilon(partials);
  Real delta = abs(est - est_prev);
  if (delta <= tol) return {est, delta, evals};
  throw accuracy_error("oscillatory quad: acceleration did not converge", est, delta);
}

}  // namespace

QuadResult quad_to_inf(const Integrand& f, const Real& a, const Real& tol,
                       const QuadHints& hints) {
  if (hints.period > 0) return oscillatory_to_inf(f, a, tol, hints);
  return exp_sinh(f, a, Real(hints.decay_scale), tol, hints.max_level);
}

}  // namespace genli
