#pragma once

namespace lomnitz {

/// Constants of the generalized Lomnitz model.
class MaterialParameters {
 public:
  /// Throws DomainError unless q, E0, tau0 > 0 and 0 < nu <= 1. J0 is set to 1/E0.
  MaterialParameters(double q, double E0, double tau0, double nu);

  /// Dimensionless model (E0 = tau0 = 1) used throughout the figures.
  static MaterialParameters dimensionless(double nu, double q = 1.0);

  double q() const { return q_; }
  double E0() const { return E0_; }
  double tau0() const { return tau0_; }
  double nu() const { return nu_; }
  double J0() const { return J0_; }

 private:
  double q_;
  double E0_;
  double tau0_;
  double nu_;
  double J0_;
};

enum class Regime { small_time, large_time };

/// psi(t) = q ln^nu(1 + t/tau0) / Gamma(1 + nu).
double creep_psi(const MaterialParameters& p, double t);

/// d psi / dt. Diverges at t = 0 for nu < 1 (DomainError there).
double creep_rate(const MaterialParameters& p, double t);

/// Strain under a stress step sigma0: (sigma0/E0) (1 + psi(t)).
double creep_strain(const MaterialParameters& p, double sigma0, double t);

/// J(t) = J0 (1 + psi(t)).
double compliance(const MaterialParameters& p, double t);

/**
 * Leading behaviour of psi: q (t/tau0)^nu / Gamma(1+nu) for t/tau0 <= 1, and
 * q ln^nu(t/tau0) / Gamma(1+nu) for t/tau0 >= 10. Other t throw DomainError.
 */
double creep_asymptotic(const MaterialParameters& p, double t, Regime regime);

}  // namespace lomnitz
