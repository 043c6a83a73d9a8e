#pragma once

#include <string>
#include <vector>

#include "lomnitz/creep.hpp"

namespace lomnitz {

/// Nodes t_j = j h, j = 0..n.
struct UniformGrid {
  double h = 0.01;
  int n = 1;

  double time(int j) const { return j * h; }
  double horizon() const { return n * h; }
  void validate() const;

  /// Smallest grid of step h reaching at least `horizon`.
  static UniformGrid covering(double horizon, double h);
};

/// Values on a UniformGrid; values.size() == grid.n + 1.
struct SampledFunction {
  UniformGrid grid;
  std::vector<double> values;
  std::string label;

  void validate() const;
};

struct SolverReport {
  SampledFunction solution;
  std::vector<double> weights_head;  ///< Omega_1.. (at most 5), in rescaled time.
  double gamma = 0.0;
  double refinement_error = 0.0;  ///< max |phi_h - phi_{h/2}| on the shared nodes.
  std::string runtime_note;
};

/// K_nu(x) = ln^(nu-1)(1 + x) / (1 + x), x > 0.
double kernel(double nu, double x);

/**
 * Omega_1..Omega_count with Omega_n = [ln^nu(1 + nh) - ln^nu(1 + (n-1)h)] / nu.
 *
 * Evaluated as ln^nu(B) expm1(nu log1p(d / ln B)) / nu with
 * d = log1p(h / (1 + (n-1)h)), which keeps full relative accuracy when the
 * two powers nearly coincide.
 */
std::vector<double> weights(double nu, double h, int count);

/// gamma = q nu / Gamma(1 + nu).
double relaxation_gamma(const MaterialParameters& p);

/// Supremum of the steps h (caller's time units) with gamma * Omega_1 < 1.
double step_bound(const MaterialParameters& p);

/**
 * Dimensionless relaxation function phi from
 *   phi(t) = 1 - gamma int_0^t K_nu(t - tau) phi(tau) dtau
 * by product integration with phi left-constant on each panel:
 *   phi_n = 1 - gamma sum_{j<n} Omega_{n-j} phi_j.
 * Time is rescaled by tau0. The report's refinement_error comes from a second
 * solve at h/2 over the same horizon.
 *
 * Throws StepTooLargeError when gamma * Omega_1 >= 1.
 */
SolverReport solve_relaxation(const MaterialParameters& p, const UniformGrid& grid);

/// Same recursion without the h/2 re-solve.
SampledFunction solve_relaxation_only(const MaterialParameters& p, const UniformGrid& grid);

/**
 * Independent solution of the same equation: phi piecewise linear on a grid
 * four times finer, kernel moments against the linear hat functions computed
 * exactly (series on the singular panel, Gauss-Legendre elsewhere), one scalar
 * linear equation per step. Returned on the input grid.
 */
SampledFunction oracle_solve(const MaterialParameters& p, const UniformGrid& grid);

/**
 * Leading behaviour of phi for q = tau0 = 1: 1 - t^nu / Gamma(1+nu) for t <= 1,
 * Gamma(1+nu) / ln^nu(t) for t >= 10.
 */
double relaxation_asymptotic(double nu, double t, Regime regime);

/// Grid reaching t_max with at most max_steps steps, never finer than preferred_h.
UniformGrid coarse_horizon_grid(double t_max, double preferred_h, int max_steps = 20000);

}  // namespace lomnitz
