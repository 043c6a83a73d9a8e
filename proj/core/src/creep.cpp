#include "lomnitz/creep.hpp"

#include <cmath>
#include <sstream>

#include "lomnitz/errors.hpp"
#include "lomnitz/special_functions.hpp"

namespace lomnitz {

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) {
    std::ostringstream os;
    os << "time must be non-negative, got " << t;
    throw DomainError(os.str());
  }
}

}  // namespace

MaterialParameters::MaterialParameters(double q, double E0, double tau0, double nu)
    : q_(q), E0_(E0), tau0_(tau0), nu_(nu), J0_(1.0 / E0) {
  if (!(q > 0.0) || !(E0 > 0.0) || !(tau0 > 0.0)) {
    throw DomainError("q, E0 and tau0 must be positive");
  }
  if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("nu must lie in (0, 1]");
  if (!std::isfinite(q) || !std::isfinite(E0) || !std::isfinite(tau0)) {
    throw DomainError("material parameters must be finite");
  }
}

MaterialParameters MaterialParameters::dimensionless(double nu, double q) {
  return MaterialParameters(q, 1.0, 1.0, nu);
}

double creep_psi(const MaterialParameters& p, double t) {
  check_time(t);
  return p.q() * std::pow(std::log1p(t / p.tau0()), p.nu()) / gamma(1.0 + p.nu());
}

double creep_rate(const MaterialParameters& p, double t) {
  check_time(t);
  const double nu = p.nu();
  if (t == 0.0 && nu < 1.0) throw DomainError("creep rate diverges at t = 0 for nu < 1");
  const double x = t / p.tau0();
  return p.q() * nu * std::pow(std::log1p(x), nu - 1.0) / (gamma(1.0 + nu) * (1.0 + x)) /
         p.tau0();
}

double creep_strain(const MaterialParameters& p, double sigma0, double t) {
  return sigma0 / p.E0() * (1.0 + creep_psi(p, t));
}

double compliance(const MaterialParameters& p, double t) {
  return p.J0() * (1.0 + creep_psi(p, t));
}

double creep_asymptotic(const MaterialParameters& p, double t, Regime regime) {
  check_time(t);
  const double x = t / p.tau0();
  const double scale = p.q() / gamma(1.0 + p.nu());
  switch (regime) {
    case Regime::small_time:
      if (x > 1.0) throw DomainError("small-time creep asymptotics need t/tau0 <= 1");
      return scale * std::pow(x, p.nu());
    case Regime::large_time:
      if (x < 10.0) throw DomainError("large-time creep asymptotics need t/tau0 >= 10");
      return scale * std::pow(std::log(x), p.nu());
  }
  throw DomainError("unknown regime");
}

}  // namespace lomnitz
