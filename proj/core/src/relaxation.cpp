#include "lomnitz/relaxation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "lomnitz/errors.hpp"
#include "lomnitz/special_functions.hpp"

namespace lomnitz {

namespace {

struct Rescaled {
  double gamma;
  double h;  // step in units of tau0
};

Rescaled admissible(const MaterialParameters& p, const UniformGrid& grid) {
  grid.validate();
  const double h = grid.h / p.tau0();
  const double gamma = relaxation_gamma(p);
  const double omega1 = std::pow(std::log1p(h), p.nu()) / p.nu();
  if (!(gamma * omega1 < 1.0)) {
    const double suggested = 0.5 * step_bound(p);
    std::ostringstream os;
    os << "step h=" << grid.h << " too large for nu=" << p.nu() << ", q=" << p.q()
       << " (gamma*Omega_1=" << gamma * omega1 << " >= 1); try h <= " << suggested;
    throw StepTooLargeError(os.str(), suggested);
  }
  return {gamma, h};
}

std::vector<double> recursion(double gamma, const std::vector<double>& omega, int n) {
  // omega[k] holds Omega_{k+1}.
  std::vector<double> phi(n + 1);
  phi[0] = 1.0;
  for (int m = 1; m <= n; ++m) {
    double acc = 0.0;
    const double* w = omega.data() + (m - 1);
    for (int j = 0; j < m; ++j) acc += w[-j] * phi[j];
    phi[m] = 1.0 - gamma * acc;
  }
  return phi;
}

std::string label_for(const MaterialParameters& p) {
  std::ostringstream os;
  os << "phi_nu=" << p.nu();
  return os.str();
}

// A_m = (1/h) int_{mh}^{(m+1)h} K(x) (x - mh) dx, the weight of the panel's far node.
double far_node_moment(double nu, double h, int m) {
  if (m == 0) {
    // int_0^W w^(nu-1) (e^w - 1) dw = sum_{k>=1} W^(k+nu) / (k! (k+nu)),  W = ln(1+h)
    const double w = std::log1p(h);
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      term *= w / k;
      const double add = term / (k + nu);
      sum += add;
      if (add < 1e-17 * sum) break;
    }
    return std::pow(w, nu) * sum / h;
  }
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double lo = m * h;
  const auto integrand = [nu, lo, h](double x) { return kernel(nu, x) * (x - lo) / h; };
  return Rule::integrate(integrand, lo, lo + h);
}

}  // namespace

void UniformGrid::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid step must be positive");
  if (n < 1) throw DomainError("grid needs at least one step");
}

UniformGrid UniformGrid::covering(double horizon, double h) {
  if (!(horizon > 0.0)) throw DomainError("grid horizon must be positive");
  UniformGrid grid{h, 1};
  grid.validate();
  grid.n = std::max(1, static_cast<int>(std::ceil(horizon / h - 1e-9)));
  return grid;
}

void SampledFunction::validate() const {
  grid.validate();
  if (values.size() != static_cast<std::size_t>(grid.n) + 1) {
    throw DomainError("sampled function length does not match its grid");
  }
  for (const double v : values) {
    if (!std::isfinite(v)) throw DomainError("sampled function has non-finite values");
  }
}

double kernel(double nu, double x) {
  if (!(x > 0.0)) throw DomainError("kernel requires x > 0");
  const double lx = std::log1p(x);
  return std::pow(lx, nu - 1.0) / (1.0 + x);
}

std::vector<double> weights(double nu, double h, int count) {
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("nu must lie in (0, 1]");
  if (!(h > 0.0)) throw DomainError("weights need h > 0");
  if (count < 1) throw DomainError("weights need count >= 1");
  std::vector<double> omega(count);
  omega[0] = std::pow(std::log1p(h), nu) / nu;
  for (int n = 2; n <= count; ++n) {
    const double before = (n - 1) * h;
    const double log_before = std::log1p(before);
    const double step = std::log1p(h / (1.0 + before));
    omega[n - 1] = std::pow(log_before, nu) * std::expm1(nu * std::log1p(step / log_before)) / nu;
  }
  return omega;
}

double relaxation_gamma(const MaterialParameters& p) {
  return p.q() * p.nu() / gamma(1.0 + p.nu());
}

double step_bound(const MaterialParameters& p) {
  return p.tau0() * std::expm1(std::pow(gamma(1.0 + p.nu()) / p.q(), 1.0 / p.nu()));
}

SampledFunction solve_relaxation_only(const MaterialParameters& p, const UniformGrid& grid) {
  const Rescaled r = admissible(p, grid);
  const std::vector<double> omega = weights(p.nu(), r.h, grid.n);
  return {grid, recursion(r.gamma, omega, grid.n), label_for(p)};
}

SolverReport solve_relaxation(const MaterialParameters& p, const UniformGrid& grid) {
  const auto start = std::chrono::steady_clock::now();
  const Rescaled r = admissible(p, grid);

  SolverReport report;
  const std::vector<double> omega = weights(p.nu(), r.h, grid.n);
  report.solution = {grid, recursion(r.gamma, omega, grid.n), label_for(p)};
  report.gamma = r.gamma;
  report.weights_head.assign(omega.begin(), omega.begin() + std::min<int>(5, grid.n));
  const std::vector<double> half = recursion(r.gamma, weights(p.nu(), 0.5 * r.h, 2 * grid.n),
                                             2 * grid.n);
  for (int j = 0; j <= grid.n; ++j) {
    report.refinement_error =
        std::max(report.refinement_error, std::abs(report.solution.values[j] - half[2 * j]));
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  std::ostringstream note;
  note << "n=" << grid.n << " steps (+" << 2 * grid.n << " at h/2) in " << elapsed.count()
       << " ms";
  report.runtime_note = note.str();
  return report;
}

SampledFunction oracle_solve(const MaterialParameters& p, const UniformGrid& grid) {
  constexpr int kRefine = 4;
  const Rescaled r = admissible(p, grid);
  const double nu = p.nu();
  const double h = r.h / kRefine;
  const int steps = grid.n * kRefine;

  // Panel offset m covers x in [mh, (m+1)h]; near node weight B_m, far node weight A_m.
  const std::vector<double> mass = weights(nu, h, steps);
  std::vector<double> far(steps);
  std::vector<double> near(steps);
  for (int m = 0; m < steps; ++m) {
    far[m] = far_node_moment(nu, h, m);
    near[m] = mass[m] - far[m];
  }
  // Combined coefficient of phi_i (1 <= i < n) at offset d = n - i: A_{d-1} + B_d.
  std::vector<double> combined(steps + 1, 0.0);
  for (int d = 1; d < steps; ++d) combined[d] = far[d - 1] + near[d];

  std::vector<double> phi(steps + 1);
  phi[0] = 1.0;
  const double diagonal = 1.0 + r.gamma * near[0];
  for (int n = 1; n <= steps; ++n) {
    double acc = far[n - 1] * phi[0];
    for (int i = 1; i < n; ++i) acc += combined[n - i] * phi[i];
    phi[n] = (1.0 - r.gamma * acc) / diagonal;
  }

  SampledFunction out{grid, std::vector<double>(grid.n + 1), label_for(p) + " (oracle)"};
  for (int j = 0; j <= grid.n; ++j) out.values[j] = phi[kRefine * j];
  return out;
}

double relaxation_asymptotic(double nu, double t, Regime regime) {
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("nu must lie in (0, 1]");
  if (!(t >= 0.0)) throw DomainError("time must be non-negative");
  switch (regime) {
    case Regime::small_time:
      if (t > 1.0) throw DomainError("small-time relaxation asymptotics need t <= 1");
      return 1.0 - std::pow(t, nu) / gamma(1.0 + nu);
    case Regime::large_time:
      if (t < 10.0) throw DomainError("large-time relaxation asymptotics need t >= 10");
      return gamma(1.0 + nu) / std::pow(std::log(t), nu);
  }
  throw DomainError("unknown regime");
}

UniformGrid coarse_horizon_grid(double t_max, double preferred_h, int max_steps) {
  if (max_steps < 1) throw DomainError("max_steps must be positive");
  const double h = std::max(preferred_h, t_max / max_steps);
  UniformGrid grid = UniformGrid::covering(t_max, h);
  if (grid.n > max_steps) grid = UniformGrid::covering(t_max, t_max / max_steps);
  return grid;
}

}  // namespace lomnitz
