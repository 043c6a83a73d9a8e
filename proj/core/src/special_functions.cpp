#include "lomnitz/special_functions.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lomnitz/errors.hpp"

namespace lomnitz {

namespace {

using quad = __float128;

constexpr int kMaxTerms = 200000;

// Route selection on z = |x|^(1/nu). Summing the Taylor series at x < 0 loses
// roughly E_nu(|x|) ~ exp(z)/nu relative to the result; the asymptotic series
// truncated at its smallest term leaves a remainder of order exp(-z).
constexpr double kDoubleSeriesBudget = 9.0;  // z + ln(1/nu) below: double precision suffices
constexpr double kSeriesOnly = 28.0;
constexpr double kAsymptoticOnly = 36.0;
constexpr double kAgreement = 1e-10;
constexpr double kRemainderBound = 1e-11;

double sin_pi(double w) {
  const double r = std::fmod(w, 2.0);
  if (r == std::floor(r)) return 0.0;
  return std::sin(std::numbers::pi * r);
}

void check_order(double nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    std::ostringstream os;
    os << "Mittag-Leffler order must lie in (0, 1], got " << nu;
    throw DomainError(os.str());
  }
}

// sum_{k >= order} k^order x^(k - order) / Gamma(nu k + 1), order in {0, 1}.
double series_double(double nu, double x, int order) {
  double sum = 0.0;
  double power = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = order; k < kMaxTerms; ++k) {
    double term = power / std::tgamma(nu * k + 1.0);
    if (order == 1) term *= k;
    sum += term;
    const double mag = std::abs(term);
    if (mag < prev && mag <= 1e-18 * std::max(1.0, std::abs(sum))) return sum;
    prev = mag;
    power *= x;
  }
  throw ConvergenceError("Mittag-Leffler series did not converge");
}

double series_quad(double nu, double x, int order) {
  const quad xq = x;
  const quad nuq = nu;
  const quad cutoff = 1e-32;
  quad sum = 0;
  quad power = 1;
  quad prev = std::numeric_limits<double>::infinity();
  for (int k = order; k < kMaxTerms; ++k) {
    quad term = power / tgammaq(nuq * k + 1);
    if (order == 1) term *= k;
    sum += term;
    const quad mag = fabsq(term);
    if (mag < prev && mag <= cutoff) return static_cast<double>(sum);
    prev = mag;
    power *= xq;
  }
  throw ConvergenceError("Mittag-Leffler series did not converge");
}

// Positive arguments: all terms positive, summed in log space to reach large k.
double series_positive(double nu, double x, int order) {
  const double log_x = std::log(x);
  double sum = 0.0;
  double prev = 0.0;
  for (int k = order; k < kMaxTerms; ++k) {
    double log_term = (k - order) * log_x - std::lgamma(nu * k + 1.0);
    if (order == 1) log_term += std::log(static_cast<double>(k));
    const double term = std::exp(log_term);
    sum += term;
    if (!std::isfinite(sum)) {
      throw DomainError("Mittag-Leffler value overflows double precision");
    }
    if (term < prev && term <= 1e-17 * sum) return sum;
    prev = term;
  }
  throw ConvergenceError("Mittag-Leffler series did not converge");
}

struct AsymptoticSum {
  double value;
  double remainder;
};

// E(-y) ~ sum_{k>=1} (-1)^(k+1) y^-k / Gamma(1 - nu k), and its x-derivative
// sum_{k>=1} (-1)^(k+1) k y^-(k+1) / Gamma(1 - nu k). Truncated at the smallest
// term of the envelope |1/Gamma(1 - w)| <= Gamma(w)/pi.
AsymptoticSum asymptotic_negative(double nu, double y, int order) {
  const double log_y = std::log(y);
  const double log_pi = std::log(std::numbers::pi);
  double sum = 0.0;
  double prev_env = std::numeric_limits<double>::infinity();
  for (int k = 1; k < kMaxTerms; ++k) {
    const double w = nu * k;
    double log_mag = std::lgamma(w) - (k + order) * log_y;
    if (order == 1) log_mag += std::log(static_cast<double>(k));
    const double env = std::exp(log_mag - log_pi);
    if (env > prev_env) return {sum, prev_env};
    if (env < 1e-17 * std::abs(sum)) return {sum, env};
    double term = std::exp(log_mag) * sin_pi(w) / std::numbers::pi;
    if (k % 2 == 0) term = -term;
    sum += term;
    prev_env = env;
  }
  return {sum, prev_env};
}

double evaluate(double nu, double x, int order) {
  check_order(nu);
  if (!std::isfinite(x)) throw DomainError("Mittag-Leffler argument must be finite");
  if (nu == 1.0) return std::exp(x);
  if (x == 0.0) return order == 0 ? 1.0 : reciprocal_gamma(nu + 1.0);
  if (x > 0.0) return series_positive(nu, x, order);

  const double y = -x;
  const double z = std::pow(y, 1.0 / nu);
  if (z + std::log(1.0 / nu) < kDoubleSeriesBudget) return series_double(nu, x, order);
  if (z < kSeriesOnly) return series_quad(nu, x, order);

  const AsymptoticSum asym = asymptotic_negative(nu, y, order);
  if (z > kAsymptoticOnly) {
    if (asym.remainder > kRemainderBound) {
      std::ostringstream os;
      os << "Mittag-Leffler asymptotic remainder " << asym.remainder << " at nu=" << nu
         << ", x=" << x << " exceeds " << kRemainderBound;
      throw ConvergenceError(os.str());
    }
    return asym.value;
  }
  const double series = series_quad(nu, x, order);
  if (std::abs(series - asym.value) > kAgreement) {
    std::ostringstream os;
    os << "Mittag-Leffler series and asymptotic routes disagree by "
       << std::abs(series - asym.value) << " at nu=" << nu << ", x=" << x;
    throw ConvergenceError(os.str());
  }
  return series;
}

}  // namespace

void MLArgument::validate() const {
  check_order(nu);
  if (!std::isfinite(x)) throw DomainError("Mittag-Leffler argument must be finite");
}

double gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    std::ostringstream os;
    os << "Gamma has a pole at " << x;
    throw PoleError(os.str());
  }
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double mittag_leffler(double nu, double x) { return evaluate(nu, x, 0); }

double mittag_leffler(const MLArgument& arg) {
  arg.validate();
  return evaluate(arg.nu, arg.x, 0);
}

double mittag_leffler_derivative(double nu, double x) { return evaluate(nu, x, 1); }

double log_ml(double nu, double t) {
  if (!(t >= 0.0)) throw DomainError("log_ml requires t >= 0");
  return mittag_leffler(nu, -std::pow(std::log1p(t), nu));
}

double log_ml_derivative(double nu, double t) {
  check_order(nu);
  if (!(t >= 0.0) || (t == 0.0 && nu < 1.0)) {
    throw DomainError("log_ml_derivative requires t > 0 for nu < 1");
  }
  const double ln = std::log1p(t);
  const double x = -std::pow(ln, nu);
  const double dx_dt = -nu * std::pow(ln, nu - 1.0) / (1.0 + t);
  return mittag_leffler_derivative(nu, x) * dx_dt;
}

}  // namespace lomnitz
