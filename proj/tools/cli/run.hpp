#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/csv.hpp"

namespace lomnitz::cli {

enum class Subcommand { creep, relax, operator_check, laplace_check, figures };
enum class Format { csv, table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitTolerance = 2;

// Curve defaults.
inline constexpr int kLinearIntervals = 1000;
inline constexpr int kLogSamples = 400;
inline constexpr double kLogDecades = 6.0;
inline constexpr int kMaxRelaxSteps = 20000;

// Check tolerances.
inline constexpr int kOperatorPanels = 10000;
inline constexpr double kPowerLawTolerance = 1e-4;
inline constexpr double kEigenfunctionTolerance = 5e-4;
inline constexpr double kLaplaceTolerance = 2e-2;

struct RunConfig {
  Subcommand subcommand = Subcommand::creep;
  std::vector<double> nu_list;  ///< Empty: the subcommand's default set.
  double q = 1.0;
  double tau0 = 1.0;
  double h = 0.01;
  std::optional<double> t_max;  ///< Empty: the subcommand's default horizon.
  std::string output_path;      ///< Empty: standard output (figures: current directory).
  Format format = Format::csv;
  bool log_spacing = false;

  std::vector<double> effective_nu() const;
  double effective_t_max() const;
  /// Throws lomnitz::DomainError on an invalid combination.
  void validate() const;
};

/// Sample times for the creep curve: kLinearIntervals+1 uniform points on [0, t_max]
/// or kLogSamples log-spaced points on [t_max 1e-6, t_max].
std::vector<double> creep_times(double t_max, bool log_spacing);

Table creep_table(const RunConfig& config, bool log_spacing);
Table relax_table(const RunConfig& config, bool log_spacing);

/// Executes a configured subcommand. Returns kExitOk, kExitInvalid or kExitTolerance.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs it. `--help` exits 0; parse errors exit 1.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lomnitz::cli
