#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "lomnitz/errors.hpp"
#include "lomnitz/hadamard.hpp"
#include "lomnitz/special_functions.hpp"
#include "support/oracles.hpp"

using namespace lomnitz;

namespace {

DifferentiableInput constant(double c) {
  return {[c](double) { return c; }, [](double) { return 0.0; }, "const"};
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, i / (count - 1.0)));
  return out;
}

const double kE = std::exp(1.0);

}  // namespace

TEST(HadamardIntegral, UnitOrderIsPlainLogIntegral) {
  OperatorConfig cfg{1.0, 1.0, 1.0};
  EXPECT_NEAR(hadamard_integral(cfg, constant(1.0), 1.0), std::log(2.0), 1e-13);
}

TEST(HadamardIntegral, ConstantInputClosedForm) {
  OperatorConfig cfg{1.0, 1.0, 0.5};
  EXPECT_NEAR(hadamard_integral(cfg, constant(1.0), kE - 1.0), 1.1283791670955126, 1e-10);
  for (double alpha : {0.3, 0.7, 1.5, 2.5}) {
    cfg.nu = alpha;
    const double t = 4.0;
    const double expected = std::pow(std::log1p(t), alpha) / std::tgamma(1.0 + alpha);
    EXPECT_NEAR(hadamard_integral(cfg, constant(1.0), t), expected, 1e-10) << alpha;
  }
}

TEST(HadamardIntegral, ZeroInput) {
  for (double alpha : {0.25, 1.0, 3.0}) {
    OperatorConfig cfg{1.0, 1.0, alpha};
    EXPECT_EQ(hadamard_integral(cfg, constant(0.0), 2.0), 0.0);
  }
}

TEST(HadamardIntegral, SmoothInputAgainstTanhSinh) {
  OperatorConfig cfg{1.0, 2.0, 0.4};
  DifferentiableInput f{[](double t) { return std::cos(t) + t * t; }, {}, "cos+t^2"};
  const double t = 3.0;
  const double U = cfg.log_time(t);
  const double reference =
      oracle::riemann_in_u(cfg.nu, U, [&](double u) { return f.f(cfg.time_of(u)); });
  const auto eval = evaluate_hadamard_integral(cfg, f, t);
  EXPECT_NEAR(eval.value, reference, 1e-7 * std::abs(reference));
  EXPECT_GE(eval.refinement_estimate, 0.0);
  EXPECT_FALSE(eval.accuracy_warning);
}

TEST(HadamardIntegral, Errors) {
  OperatorConfig cfg{0.5, 1.0, 0.5};  // t_low = 0.5
  EXPECT_THROW(hadamard_integral(cfg, constant(1.0), 0.5), DomainError);
  EXPECT_THROW(hadamard_integral(cfg, constant(1.0), 0.2), DomainError);
  EXPECT_THROW(hadamard_integral(cfg, constant(1.0), 2.0, 1), DomainError);
  cfg.nu = 0.0;
  EXPECT_THROW(hadamard_integral(cfg, constant(1.0), 2.0), DomainError);
  OperatorConfig bad_a{1.5, 1.0, 0.5};
  EXPECT_THROW(hadamard_integral(bad_a, constant(1.0), 2.0), DomainError);
  OperatorConfig bad_b{1.0, 0.0, 0.5};
  EXPECT_THROW(hadamard_integral(bad_b, constant(1.0), 2.0), DomainError);
}

TEST(OperatorConfig, LogTimeRoundTrip) {
  OperatorConfig cfg{0.3, 2.5, 0.5};
  EXPECT_NEAR(cfg.lower_limit(), 0.28, 1e-15);
  EXPECT_EQ(cfg.log_time(cfg.lower_limit()), 0.0);
  for (double t : {0.28 + 1e-12, 0.3, 1.0, 100.0}) {
    EXPECT_NEAR(cfg.time_of(cfg.log_time(t)), t, 1e-14 * (1 + t));
    EXPECT_NEAR(cfg.log_time(t), std::log(cfg.a + cfg.b * t), 1e-12);
  }
}

TEST(HadamardDerivative, ConstantGivesZero) {
  for (double nu : {0.25, 0.5, 1.0}) {
    OperatorConfig cfg{1.0, 1.0, nu};
    EXPECT_EQ(hadamard_derivative(cfg, constant(3.0), 2.0), 0.0);
    DifferentiableInput no_df{[](double) { return 3.0; }, {}, "const"};
    EXPECT_NEAR(hadamard_derivative(cfg, no_df, 2.0), 0.0, 1e-9);
  }
}

TEST(HadamardDerivative, SquaredLogAtUnitLog) {
  OperatorConfig cfg{1.0, 1.0, 0.5};
  const double value = hadamard_derivative(cfg, log_power(cfg, 2.0), kE - 1.0);
  EXPECT_NEAR(value, 1.5045055561, 1e-7);
  EXPECT_NEAR(power_law_image(cfg, 2.0, kE - 1.0), 1.5045055561, 1e-9);
}

TEST(HadamardDerivative, UnitOrderIsScaledDerivative) {
  OperatorConfig cfg{1.0, 1.0, 1.0};
  for (double t : {0.0, 0.5, 3.0, 50.0}) {
    EXPECT_NEAR(hadamard_derivative(cfg, log_power(cfg, 1.0), t + 1e-9), 1.0, 1e-10);
  }
  DifferentiableInput f{[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); },
                        "sin"};
  for (double t : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(hadamard_derivative(cfg, f, t), (1.0 + t) * std::cos(t), 1e-10);
  }
}

TEST(HadamardDerivative, SmoothInputAgainstTanhSinh) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> order(0.2, 0.9);
  std::uniform_real_distribution<double> time(0.2, 6.0);
  for (int i = 0; i < 8; ++i) {
    OperatorConfig cfg{1.0, 1.0, order(rng)};
    const double t = time(rng);
    DifferentiableInput f{[](double x) { return std::exp(-x) * std::sin(2 * x); },
                          [](double x) { return std::exp(-x) * (2 * std::cos(2 * x) - std::sin(2 * x)); },
                          "damped"};
    const double U = cfg.log_time(t);
    const double reference = oracle::caputo_in_u(cfg.nu, U, [&](double u) {
      const double x = cfg.time_of(u);
      return (1.0 + x) * f.df(x);
    });
    // second-order quadrature on a graded mesh; g = (1+t) f' carries factors e^u
    EXPECT_NEAR(hadamard_derivative(cfg, f, t), reference, 1e-6) << cfg.nu << ' ' << t;
  }
}

TEST(HadamardDerivative, Linearity) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  DifferentiableInput f{[](double t) { return std::log1p(t) * std::cos(t); }, {}, "f"};
  DifferentiableInput g{[](double t) { return std::sqrt(1.0 + t); }, {}, "g"};
  for (int i = 0; i < 6; ++i) {
    const double c1 = coef(rng);
    const double c2 = coef(rng);
    DifferentiableInput combo{[&](double t) { return c1 * f.f(t) + c2 * g.f(t); }, {}, "combo"};
    for (double nu : {0.3, 0.7}) {
      OperatorConfig cfg{1.0, 1.0, nu};
      const double t = 2.5;
      const double lhs = hadamard_derivative(cfg, combo, t);
      const double rhs = c1 * hadamard_derivative(cfg, f, t) + c2 * hadamard_derivative(cfg, g, t);
      EXPECT_NEAR(lhs, rhs, 1e-6 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST(HadamardDerivative, FiniteDifferenceFallbackMatchesAnalytic) {
  OperatorConfig cfg{1.0, 1.0, 0.6};
  DifferentiableInput with_df{[](double t) { return t * t; }, [](double t) { return 2 * t; }, "t2"};
  DifferentiableInput without_df{with_df.f, {}, "t2"};
  const double t = 1.7;
  const auto analytic = evaluate_hadamard_derivative(cfg, with_df, t);
  const auto numeric = evaluate_hadamard_derivative(cfg, without_df, t);
  EXPECT_NEAR(analytic.value, numeric.value, 1e-7);
  EXPECT_EQ(numeric.derivative_warnings, 0);
}

TEST(HadamardDerivative, FiniteDifferenceWarnsOnRoughInput) {
  OperatorConfig cfg{1.0, 1.0, 0.5};
  // ripple on the scale of the difference step
  DifferentiableInput rough{[](double t) { return t + 1e-8 * std::sin(1e7 * t); }, {}, "rough"};
  const auto eval = evaluate_hadamard_derivative(cfg, rough, 2.0, 1000);
  EXPECT_GT(eval.derivative_warnings, 0);
}

TEST(HadamardDerivative, RejectsOrdersOutsideUnitInterval) {
  for (double nu : {0.0, -0.5, 1.5}) {
    OperatorConfig cfg{1.0, 1.0, nu};
    EXPECT_THROW(hadamard_derivative(cfg, constant(1.0), 1.0), DomainError) << nu;
  }
}

TEST(HadamardDerivative, CaputoHadamardReduction) {
  // a = 0, b = 1: t_low = 1 and u = ln t.
  for (double nu : {0.3, 0.5, 0.8}) {
    OperatorConfig cfg{0.0, 1.0, nu};
    EXPECT_EQ(cfg.lower_limit(), 1.0);
    for (double beta : {0.5, 1.0, 2.5}) {
      for (double t : {1.5, 4.0, 20.0}) {
        const double U = std::log(t);
        const double reference =
            oracle::caputo_in_u(nu, U, [&](double u) { return beta * std::pow(u, beta - 1.0); });
        const double value = hadamard_derivative(cfg, log_power(cfg, beta), t);
        EXPECT_NEAR(value / reference, 1.0, 1e-6) << nu << ' ' << beta << ' ' << t;
      }
    }
    DifferentiableInput f{[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); },
                          "sin"};
    const double t = 3.0;
    const double reference = oracle::caputo_in_u(nu, std::log(t), [&](double u) {
      const double x = std::exp(u);
      return x * std::cos(x);
    });
    EXPECT_NEAR(hadamard_derivative(cfg, f, t), reference, 1e-6) << nu;
  }
}

TEST(PowerLaw, ExamplesAndTolerance) {
  const auto samples = log_spaced(0.1, 10.0, 12);
  for (double beta : {0.5, 1.0, 2.0}) {
    for (double nu : {0.25, 0.5, 0.75}) {
      OperatorConfig cfg{1.0, 1.0, nu};
      EXPECT_LE(verify_power_law_property(cfg, beta, samples), 1e-4) << beta << ' ' << nu;
    }
  }
  OperatorConfig unit{1.0, 1.0, 1.0};
  EXPECT_LE(verify_power_law_property(unit, 1.0, samples), 1e-12);
  // beta = nu: the image is the constant Gamma(1 + nu).
  for (double nu : {0.3, 0.6}) {
    OperatorConfig cfg{1.0, 1.0, nu};
    EXPECT_NEAR(power_law_image(cfg, nu, 0.7), std::tgamma(1.0 + nu), 1e-14);
    EXPECT_NEAR(power_law_image(cfg, nu, 70.0), std::tgamma(1.0 + nu), 1e-14);
    EXPECT_LE(verify_power_law_property(cfg, nu, samples), 1e-4);
  }
}

TEST(PowerLaw, RejectsNonPositiveBeta) {
  OperatorConfig cfg{1.0, 1.0, 0.5};
  const std::array<double, 1> samples{1.0};
  EXPECT_THROW(verify_power_law_property(cfg, 0.0, samples), DomainError);
  EXPECT_THROW(verify_power_law_property(cfg, -0.5, samples), DomainError);
}

TEST(PowerLaw, DoublingPanelsIsSecondOrder) {
  const std::array<double, 3> samples{0.3, 2.0, 9.0};
  for (double nu : {0.25, 0.5, 0.75}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      OperatorConfig cfg{1.0, 1.0, nu};
      for (double t : samples) {
        const double exact = power_law_image(cfg, beta, t);
        const auto input = log_power(cfg, beta);
        const double coarse = std::abs(hadamard_derivative(cfg, input, t, 1000) - exact);
        const double fine = std::abs(hadamard_derivative(cfg, input, t, 2000) - exact);
        // beta = 1, 2: the interpolant is exact and only roundoff remains.
        if (coarse < 1e-12 * (1.0 + std::abs(exact))) continue;
        EXPECT_GE(coarse / fine, 3.0) << nu << ' ' << beta << ' ' << t;
      }
    }
  }
}

TEST(Eigenfunction, Deviation) {
  const std::array<double, 3> samples{0.5, 1.0, 2.0};
  for (double nu : {0.5, 0.75}) {
    EXPECT_LE(verify_eigenfunction(OperatorConfig{1.0, 1.0, nu}, samples), 5e-4) << nu;
  }
  EXPECT_LE(verify_eigenfunction(OperatorConfig{1.0, 1.0, 1.0}, samples), 1e-14);
}

TEST(Eigenfunction, Preconditions) {
  const std::array<double, 1> zero{0.0};
  const std::array<double, 1> one{1.0};
  EXPECT_THROW(verify_eigenfunction(OperatorConfig{1.0, 1.0, 0.5}, zero), DomainError);
  EXPECT_THROW(verify_eigenfunction(OperatorConfig{0.0, 1.0, 0.5}, one), DomainError);
}

TEST(Eigenfunction, NearOriginBothSidesApproachMinusOne) {
  OperatorConfig cfg{1.0, 1.0, 0.5};
  DifferentiableInput e{[](double t) { return log_ml(0.5, t); },
                        [](double t) { return log_ml_derivative(0.5, t); }, "E"};
  const double value = hadamard_derivative(cfg, e, 1e-3);
  EXPECT_NEAR(value, -log_ml(0.5, 1e-3), 1e-3);
  EXPECT_NEAR(value, -1.0, 0.05);
}
