#include "lomnitz/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "lomnitz/errors.hpp"
#include "lomnitz/special_functions.hpp"

namespace lomnitz {

namespace {

// Mesh grading exponent towards t_low. Interpolating g ~ u^(beta-1) linearly on
// u_i = U (i/N)^r is second order once r * beta >= 2.
constexpr double kGrading = 4.0;
// Nodes closer to t_low than this (relative to U) are folded into the mean panel.
constexpr double kMeanPanelFloor = 1e-8;

struct PanelWeights {
  double left;   // multiplies g(u_j)
  double right;  // multiplies g(u_{j+1})
};

// int_{u_j}^{u_{j+1}} (U - u)^(alpha-1) {basis} du with s = U - u in [near, far].
PanelWeights panel_weights(double alpha, double far, double near) {
  const double width = far - near;
  if (near > 4.0 * width) {
    // Kernel analytic on the panel: Gauss-Legendre is exact to rounding and
    // avoids the cancellation in the closed form when far ~ near.
    using Rule = boost::math::quadrature::gauss<double, 8>;
    const auto& nodes = Rule::abscissa();
    const auto& weights = Rule::weights();
    const double centre = 0.5 * (far + near);
    const double half = 0.5 * width;
    double left = 0.0;
    double right = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (const double sign : {-1.0, 1.0}) {
        const double s = centre + sign * half * nodes[i];
        const double k = weights[i] * std::pow(s, alpha - 1.0);
        left += k * (s - near);
        right += k * (far - s);
      }
    }
    return {left * half / width, right * half / width};
  }
  const double m0 = (std::pow(far, alpha) - std::pow(near, alpha)) / alpha;
  const double m1 = (std::pow(far, alpha + 1.0) - std::pow(near, alpha + 1.0)) / (alpha + 1.0);
  return {(m1 - near * m0) / width, (far * m0 - m1) / width};
}

// (1/Gamma(alpha)) int_0^U (U - u)^(alpha-1) G(u) du with G piecewise linear
// on `nodes`. If mean_panel is set, G on the first panel is the constant
// first_mean rather than an interpolant (values[0] is then unused).
double product_integrate(double alpha, const std::vector<double>& nodes,
                         const std::vector<double>& values, bool mean_panel, double first_mean) {
  const double upper = nodes.back();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    const PanelWeights w = panel_weights(alpha, upper - nodes[j], upper - nodes[j + 1]);
    if (j == 0 && mean_panel) {
      sum += (w.left + w.right) * first_mean;
    } else {
      sum += w.left * values[j] + w.right * values[j + 1];
    }
  }
  return sum / gamma(alpha);
}

void check_kernel(const OperatorConfig& cfg) {
  if (!(cfg.a >= 0.0 && cfg.a <= 1.0)) throw DomainError("operator requires 0 <= a <= 1");
  if (!(cfg.b > 0.0)) throw DomainError("operator requires b > 0");
}

void check_point(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                 int panels) {
  if (!input.f) throw DomainError("operator input '" + input.label + "' has no function");
  if (!(t > cfg.lower_limit()) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "operator evaluated at t=" << t << " not above the lower limit " << cfg.lower_limit();
    throw DomainError(os.str());
  }
  if (panels < 2) throw DomainError("operator quadrature needs at least 2 panels");
}

void check_derivative_order(const OperatorConfig& cfg) {
  check_kernel(cfg);
  if (!(cfg.nu > 0.0 && cfg.nu <= 1.0)) {
    throw DomainError("derivative order must lie in (0, 1]");
  }
}

struct Derivative {
  double value;
  bool warning;
};

// Central differences (one-sided near t_low) with one Richardson step.
Derivative estimate_derivative(const OperatorConfig& cfg, const DifferentiableInput& input,
                               double t) {
  if (input.df) return {input.df(t), false};
  const auto& f = input.f;
  const double h = std::max(1e-6, 1e-6 * (1.0 + std::abs(t)));
  const bool central = t - h >= cfg.lower_limit();
  auto difference = [&](double step) {
    if (central) return (f(t + step) - f(t - step)) / (2.0 * step);
    return (-3.0 * f(t) + 4.0 * f(t + step) - f(t + 2.0 * step)) / (2.0 * step);
  };
  const double coarse = difference(h);
  const double fine = difference(0.5 * h);
  const double refined = (4.0 * fine - coarse) / 3.0;
  const bool warning = std::abs(refined - fine) > 1e-5 * std::max(std::abs(refined), 1e-8);
  return {refined, warning};
}

struct Quadrature {
  double value;
  int warnings;
};

Quadrature integral_once(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                         int panels) {
  const double alpha = cfg.nu;
  const double upper = cfg.log_time(t);
  std::vector<double> nodes(panels + 1);
  std::vector<double> values(panels + 1);
  for (int i = 0; i <= panels; ++i) {
    nodes[i] = upper * static_cast<double>(i) / panels;
    values[i] = input.f(i == 0 ? cfg.lower_limit() : cfg.time_of(nodes[i]));
  }
  nodes.back() = upper;
  return {product_integrate(alpha, nodes, values, false, 0.0), 0};
}

Quadrature derivative_once(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                           int panels) {
  if (cfg.nu == 1.0) {
    const Derivative d = estimate_derivative(cfg, input, t);
    return {(cfg.a / cfg.b + t) * d.value, d.warning ? 1 : 0};
  }
  const double upper = cfg.log_time(t);
  std::vector<double> nodes;
  nodes.reserve(panels + 1);
  nodes.push_back(0.0);
  for (int i = 1; i < panels; ++i) {
    const double u = upper * std::pow(static_cast<double>(i) / panels, kGrading);
    if (u >= kMeanPanelFloor * upper) nodes.push_back(u);
  }
  nodes.push_back(upper);

  std::vector<double> values(nodes.size(), 0.0);
  int warnings = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double tau = i + 1 == nodes.size() ? t : cfg.time_of(nodes[i]);
    const Derivative d = estimate_derivative(cfg, input, tau);
    if (d.warning) ++warnings;
    // (a/b + tau) f'(tau) = e^u f'(tau) / b
    values[i] = (cfg.a / cfg.b + tau) * d.value;
  }
  const double tau1 = nodes.size() == 2 ? t : cfg.time_of(nodes[1]);
  const double mean = (input.f(tau1) - input.f(cfg.lower_limit())) / nodes[1];
  return {product_integrate(1.0 - cfg.nu, nodes, values, true, mean), warnings};
}

OperatorEvaluation with_refinement(Quadrature fine, Quadrature coarse) {
  OperatorEvaluation out;
  out.value = fine.value;
  out.refinement_estimate = std::abs(fine.value - coarse.value);
  out.derivative_warnings = fine.warnings;
  out.accuracy_warning =
      out.refinement_estimate > kOperatorTolerance * std::max(1.0, std::abs(fine.value));
  return out;
}

}  // namespace

double OperatorConfig::log_time(double t) const { return std::log1p(b * (t - lower_limit())); }

double OperatorConfig::time_of(double u) const { return lower_limit() + std::expm1(u) / b; }

double hadamard_integral(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                         int panels) {
  check_kernel(cfg);
  if (!(cfg.nu > 0.0)) throw DomainError("integral order must be positive");
  check_point(cfg, input, t, panels);
  return integral_once(cfg, input, t, panels).value;
}

OperatorEvaluation evaluate_hadamard_integral(const OperatorConfig& cfg,
                                              const DifferentiableInput& input, double t,
                                              int panels) {
  check_kernel(cfg);
  if (!(cfg.nu > 0.0)) throw DomainError("integral order must be positive");
  check_point(cfg, input, t, panels);
  return with_refinement(integral_once(cfg, input, t, panels),
                         integral_once(cfg, input, t, std::max(2, panels / 2)));
}

double hadamard_derivative(const OperatorConfig& cfg, const DifferentiableInput& input, double t,
                           int panels) {
  check_derivative_order(cfg);
  check_point(cfg, input, t, panels);
  return derivative_once(cfg, input, t, panels).value;
}

OperatorEvaluation evaluate_hadamard_derivative(const OperatorConfig& cfg,
                                                const DifferentiableInput& input, double t,
                                                int panels) {
  check_derivative_order(cfg);
  check_point(cfg, input, t, panels);
  return with_refinement(derivative_once(cfg, input, t, panels),
                         derivative_once(cfg, input, t, std::max(2, panels / 2)));
}

DifferentiableInput log_power(const OperatorConfig& cfg, double beta) {
  DifferentiableInput input;
  input.f = [cfg, beta](double t) { return std::pow(cfg.log_time(t), beta); };
  input.df = [cfg, beta](double t) {
    const double u = cfg.log_time(t);
    return beta * std::pow(u, beta - 1.0) * cfg.b / (cfg.a + cfg.b * t);
  };
  std::ostringstream os;
  os << "ln^" << beta << "(a+bt)";
  input.label = os.str();
  return input;
}

double power_law_image(const OperatorConfig& cfg, double beta, double t) {
  return gamma(beta + 1.0) * reciprocal_gamma(beta + 1.0 - cfg.nu) *
         std::pow(cfg.log_time(t), beta - cfg.nu);
}

double verify_power_law_property(const OperatorConfig& cfg, double beta,
                                 std::span<const double> t_samples, int panels) {
  check_derivative_order(cfg);
  if (beta == 0.0) throw DomainError("beta = 0 is excluded: the image of a constant is 0");
  if (!(beta > 0.0)) throw DomainError("beta must be positive for the Caputo-form operator");
  const DifferentiableInput input = log_power(cfg, beta);
  double worst = 0.0;
  for (const double t : t_samples) {
    const double numeric = hadamard_derivative(cfg, input, t, panels);
    const double exact = power_law_image(cfg, beta, t);
    worst = std::max(worst, std::abs(numeric - exact) / std::abs(exact));
  }
  return worst;
}

double verify_eigenfunction(const OperatorConfig& cfg, std::span<const double> t_samples,
                            int panels) {
  check_derivative_order(cfg);
  if (cfg.a != 1.0 || cfg.b != 1.0) {
    throw DomainError("eigenfunction check requires a = b = 1");
  }
  const double nu = cfg.nu;
  DifferentiableInput input;
  input.f = [nu](double t) { return log_ml(nu, t); };
  input.df = [nu](double t) { return log_ml_derivative(nu, t); };
  input.label = "E_nu(-ln^nu(1+t))";
  double worst = 0.0;
  for (const double t : t_samples) {
    if (!(t > 0.0)) throw DomainError("eigenfunction samples must be positive");
    const double image = hadamard_derivative(cfg, input, t, panels);
    worst = std::max(worst, std::abs(image + log_ml(nu, t)));
  }
  return worst;
}

}  // namespace lomnitz
