#pragma once

namespace lomnitz {

/// Order and argument of the one-parameter Mittag-Leffler function E_{nu,1}(x).
struct MLArgument {
  double nu;
  double x;

  /// Throws DomainError unless 0 < nu <= 1 and x is finite.
  void validate() const;
};

/// Gamma function. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// 1 / Gamma(x); zero at the poles of Gamma.
double reciprocal_gamma(double x);

/**
 * One-parameter Mittag-Leffler function E_{nu,1}(x) = sum_k x^k / Gamma(nu k + 1).
 *
 * On the negative axis the evaluation switches on z = |x|^(1/nu): a Taylor sum
 * carried in binary128 for small z, the algebraic asymptotic expansion
 * sum_k (-1)^(k+1) |x|^-k / Gamma(1 - nu k) for large z, and both (cross-checked)
 * in between. Absolute error is below 1e-10 for x <= 0. For x > 0 the series
 * has no cancellation and is summed in double; the error there is relative.
 *
 * nu == 1 returns exp(x). Throws ConvergenceError when the two routes disagree
 * in the crossover band or the asymptotic remainder is too large.
 */
double mittag_leffler(double nu, double x);
double mittag_leffler(const MLArgument& arg);

/// d/dx E_{nu,1}(x), evaluated with the same route selection as mittag_leffler.
double mittag_leffler_derivative(double nu, double x);

/// E_{nu,1}(-ln^nu(1 + t)) for t >= 0.
double log_ml(double nu, double t);

/// d/dt of log_ml; requires t > 0 when nu < 1.
double log_ml_derivative(double nu, double t);

}  // namespace lomnitz
