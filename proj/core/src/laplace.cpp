#include "lomnitz/laplace.hpp"

#include <cmath>
#include <sstream>

#include "lomnitz/errors.hpp"

namespace lomnitz {

namespace {

// 1 - e^{-x} (1 + x), by its Taylor series where the closed form cancels.
double ramp_factor(double x) {
  if (x >= 0.5) return -std::expm1(-x) - x * std::exp(-x);
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    term *= -x / k;  // (-x)^k / k!
    if (k >= 2) {
      const double add = (k - 1) * term;
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
  }
  return sum;
}

}  // namespace

LaplaceTransform laplace_of_sampled(const SampledFunction& f, double s) {
  f.validate();
  if (!(s > 0.0)) throw DomainError("Laplace variable must be positive");
  const double h = f.grid.h;
  const double x = s * h;
  if (x > kMaxPanelDecay) {
    std::ostringstream os;
    os << "s*h=" << x << " exceeds " << kMaxPanelDecay << " for panel-exact Laplace integration";
    throw InstabilityError(os.str());
  }
  const double constant_part = -std::expm1(-x) / s;
  const double ramp_part = ramp_factor(x) / (s * s * h);
  double sum = 0.0;
  for (int j = 0; j < f.grid.n; ++j) {
    const double lo = f.values[j];
    const double hi = f.values[j + 1];
    sum += std::exp(-s * f.grid.time(j)) * (lo * constant_part + (hi - lo) * ramp_part);
  }
  LaplaceTransform out;
  out.value = sum;
  out.probe.s = s;
  out.probe.truncation_T = f.grid.horizon();
  out.probe.tail_estimate = std::abs(f.values.back()) * std::exp(-s * f.grid.horizon()) / s;
  return out;
}

std::vector<LaplaceResidual> check_laplace_identity(const MaterialParameters& p,
                                                    const SampledFunction& phi,
                                                    std::span<const double> probes) {
  phi.validate();
  SampledFunction psi{phi.grid, std::vector<double>(phi.values.size()), "psi"};
  for (int j = 0; j <= phi.grid.n; ++j) psi.values[j] = creep_psi(p, phi.grid.time(j));

  std::vector<LaplaceResidual> out;
  out.reserve(probes.size());
  for (const double s : probes) {
    if (!(s * phi.grid.horizon() >= kMinHorizonDecay)) {
      std::ostringstream os;
      os << "horizon T=" << phi.grid.horizon() << " too short for probe s=" << s
         << " (need s*T >= " << kMinHorizonDecay << ")";
      throw InsufficientHorizonError(os.str());
    }
    const LaplaceTransform phi_t = laplace_of_sampled(phi, s);
    const LaplaceTransform psi_t = laplace_of_sampled(psi, s);
    LaplaceResidual r;
    r.s = s;
    r.phi_transform = phi_t.value;
    r.psi_transform = psi_t.value;
    r.predicted = 1.0 / (s * (1.0 + s * psi_t.value));
    r.residual = std::abs(phi_t.value - r.predicted) / std::abs(phi_t.value);
    r.tail_estimate = phi_t.probe.tail_estimate + psi_t.probe.tail_estimate;
    out.push_back(r);
  }
  return out;
}

}  // namespace lomnitz
