#pragma once

#include <functional>
#include <span>
#include <string>

namespace lomnitz {

/**
 * Parameters of the logarithmic-kernel operators
 *
 *   I_alpha f(t) = 1/Gamma(alpha) int_{t_low}^t ln^(alpha-1)((a+bt)/(a+b tau)) f(tau) b/(a+b tau) dtau
 *   O_nu f(t)    = I_(1-nu) [ (a/b + t) f'(t) ],      0 < nu < 1
 *   O_1 f(t)     = (a/b + t) f'(t)
 *
 * with t_low = (1 - a)/b. a = b = 1 gives the operator of the generalized
 * Lomnitz model; a = 0, b = 1 the Caputo-type Hadamard derivative on [1, t].
 */
struct OperatorConfig {
  double a = 1.0;
  double b = 1.0;
  double nu = 0.5;  ///< Derivative order in (0, 1]; read as alpha > 0 by hadamard_integral.

  double lower_limit() const { return (1.0 - a) / b; }

  /// Maps t to u = ln(a + b t); u(t_low) = 0.
  double log_time(double t) const;
  /// Inverse of log_time, accurate near t_low.
  double time_of(double u) const;
};

/// A function of time on [t_low, T] with an optional analytic derivative.
struct DifferentiableInput {
  std::function<double(double)> f;
  std::function<double(double)> df;  ///< Empty: central differences with Richardson refinement.
  std::string label;
};

/// Value plus diagnostics of one operator evaluation.
struct OperatorEvaluation {
  double value = 0.0;
  /// |value(panels) - value(panels / 2)|.
  double refinement_estimate = 0.0;
  /// Nodes where the finite-difference derivative failed its self-consistency check.
  int derivative_warnings = 0;
  bool accuracy_warning = false;
};

/// Default node count for the operator checks.
inline constexpr int kDefaultPanels = 10000;

/// Tolerance on refinement_estimate above which accuracy_warning is set (relative to |value|, floor 1).
inline constexpr double kOperatorTolerance = 1e-6;

/**
 * I_alpha f(t), alpha = cfg.nu > 0. Substitutes u = ln(a + b tau) so the
 * kernel becomes (U - u)^(alpha - 1), then integrates the kernel exactly
 * against the piecewise-linear interpolant of f on a uniform u-grid.
 */
double hadamard_integral(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                         int panels = kDefaultPanels);
OperatorEvaluation evaluate_hadamard_integral(const OperatorConfig& cfg,
                                              const DifferentiableInput& input, double t,
                                              int panels = kDefaultPanels);

/**
 * O_nu f(t) for nu in (0, 1].
 *
 * For nu < 1 the integrand g = (a/b + tau) f' = dF/du is product-integrated on
 * a u-grid graded towards t_low, where g may be weakly singular (f = ln^beta
 * with beta < 1, or the Mittag-Leffler eigenfunction). The first panel uses
 * the exact panel mean (F(u_1) - F(0)) / u_1 instead of interpolating g.
 */
double hadamard_derivative(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                           int panels = kDefaultPanels);
OperatorEvaluation evaluate_hadamard_derivative(const OperatorConfig& cfg,
                                                const DifferentiableInput& input, double t,
                                                int panels = kDefaultPanels);

/// f(t) = ln^beta(a + b t) with its analytic derivative.
DifferentiableInput log_power(const OperatorConfig& cfg, double beta);

/// Gamma(beta + 1) / Gamma(beta + 1 - nu) * ln^(beta - nu)(a + b t).
double power_law_image(const OperatorConfig& cfg, double beta, double t);

/**
 * Worst relative discrepancy between O_nu ln^beta(a + bt) computed numerically
 * and its closed form over t_samples. beta must be positive: beta = 0 is the
 * constant (image 0) and for beta < 0 the Caputo-form integral diverges.
 */
double verify_power_law_property(const OperatorConfig& cfg, double beta,
                                 std::span<const double> t_samples,
                                 int panels = kDefaultPanels);

/// Worst |O_nu E(t) + E(t)| with E(t) = E_{nu,1}(-ln^nu(1 + t)); requires a = b = 1.
double verify_eigenfunction(const OperatorConfig& cfg, std::span<const double> t_samples,
                            int panels = kDefaultPanels);

}  // namespace lomnitz
