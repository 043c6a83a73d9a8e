#pragma once

#include <array>
#include <span>
#include <vector>

#include "lomnitz/creep.hpp"
#include "lomnitz/relaxation.hpp"

namespace lomnitz {

struct LaplaceProbe {
  double s = 1.0;
  double truncation_T = 0.0;
  double tail_estimate = 0.0;  ///< |f(T)| e^{-sT} / s
};

struct LaplaceTransform {
  double value = 0.0;
  LaplaceProbe probe;
};

/// Largest s*h accepted by laplace_of_sampled.
inline constexpr double kMaxPanelDecay = 10.0;
/// Smallest s*T accepted by check_laplace_identity (tail factor e^{-15} ~ 3e-7).
inline constexpr double kMinHorizonDecay = 15.0;
inline constexpr std::array<double, 4> kDefaultProbes{0.5, 1.0, 2.0, 5.0};

/**
 * int_0^T e^{-st} f(t) dt for the piecewise-linear interpolant of f, each panel
 * integrated in closed form. Throws InstabilityError when s*h > 10.
 */
LaplaceTransform laplace_of_sampled(const SampledFunction& f, double s);

struct LaplaceResidual {
  double s = 0.0;
  double phi_transform = 0.0;
  double psi_transform = 0.0;
  double predicted = 0.0;  ///< 1 / (s (1 + s psi~))
  double residual = 0.0;   ///< |phi~ - predicted| / phi~
  double tail_estimate = 0.0;
};

/**
 * Forward check of phi~(s) = 1 / (s (1 + s psi~(s))): psi is sampled from
 * creep_psi on phi's grid and both are transformed with laplace_of_sampled.
 * Throws InsufficientHorizonError when s*T < 15 for some probe.
 */
std::vector<LaplaceResidual> check_laplace_identity(const MaterialParameters& p,
                                                    const SampledFunction& phi,
                                                    std::span<const double> probes);

}  // namespace lomnitz
