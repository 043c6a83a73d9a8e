#include "cli/run.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "lomnitz/lomnitz.hpp"

namespace lomnitz::cli {

namespace {

const std::vector<double> kFigureNu{0.25, 0.5, 0.75, 1.0};
const std::vector<double> kOperatorNu{0.25, 0.5, 0.75};
const std::vector<double> kLaplaceNu{1.0};
const std::vector<double> kPowerLawBetas{0.5, 1.0, 2.0};
const std::vector<double> kEigenSamples{0.5, 1.0, 2.0};

constexpr double kFigureCreepLinearTMax = 10.0;
constexpr double kFigureCreepLogTMax = 1e3;
constexpr double kFigureRelaxTMax = 50.0;

std::string pass_text(bool pass) { return pass ? "pass" : "FAIL"; }

MaterialParameters material(const RunConfig& config, double nu) {
  return MaterialParameters(config.q, 1.0, config.tau0, nu);
}

UniformGrid relax_grid(const RunConfig& config) {
  return coarse_horizon_grid(config.effective_t_max(), config.h, kMaxRelaxSteps);
}

void emit(const Table& table, const RunConfig& config, std::ostream& out) {
  auto write = [&](std::ostream& stream) {
    if (config.format == Format::table) {
      write_aligned(table, stream);
    } else {
      write_csv(table, stream);
    }
  };
  if (config.output_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file " + config.output_path);
  write(file);
}

// Grid nodes closest to log-spaced targets in [h, T], without repeats.
std::vector<int> log_nodes(const UniformGrid& grid) {
  std::vector<int> nodes;
  const double lo = std::log(grid.h);
  const double hi = std::log(grid.horizon());
  for (int k = 0; k < kLogSamples; ++k) {
    const double t = std::exp(lo + (hi - lo) * k / (kLogSamples - 1));
    const int j = std::clamp(static_cast<int>(std::lround(t / grid.h)), 1, grid.n);
    if (nodes.empty() || nodes.back() != j) nodes.push_back(j);
  }
  return nodes;
}

int operator_check(const RunConfig& config, std::ostream& out) {
  std::vector<double> samples;
  constexpr int kSamples = 12;
  for (int i = 0; i < kSamples; ++i) samples.push_back(0.1 * std::pow(100.0, i / (kSamples - 1.0)));

  Table table;
  table.header = {"check", "nu", "beta", "residual", "tolerance", "status"};
  bool all_pass = true;
  for (const double nu : config.effective_nu()) {
    const OperatorConfig op{1.0, 1.0, nu};
    for (const double beta : kPowerLawBetas) {
      const double residual = verify_power_law_property(op, beta, samples, kOperatorPanels);
      const bool pass = residual <= kPowerLawTolerance;
      all_pass = all_pass && pass;
      table.rows.push_back({"power_law", format_label(nu), format_label(beta),
                            format_number(residual), format_number(kPowerLawTolerance),
                            pass_text(pass)});
    }
    const double deviation = verify_eigenfunction(op, kEigenSamples, kOperatorPanels);
    const bool pass = deviation <= kEigenfunctionTolerance;
    all_pass = all_pass && pass;
    table.rows.push_back({"eigenfunction", format_label(nu), "", format_number(deviation),
                          format_number(kEigenfunctionTolerance), pass_text(pass)});
  }
  table.comments.push_back("power_law: relative error of O_nu ln^beta(1+t), t in [0.1, 10], " +
                           std::to_string(kOperatorPanels) + " panels");
  table.comments.push_back("eigenfunction: max |O_nu E + E| at t in {0.5, 1, 2}");
  emit(table, config, out);
  return all_pass ? kExitOk : kExitTolerance;
}

int laplace_check(const RunConfig& config, std::ostream& out) {
  const UniformGrid grid = UniformGrid::covering(config.effective_t_max(), config.h);
  Table table;
  table.header = {"nu", "s", "phi_transform", "psi_transform", "predicted", "residual",
                  "tolerance", "status"};
  bool all_pass = true;
  for (const double nu : config.effective_nu()) {
    const MaterialParameters p = material(config, nu);
    const SampledFunction phi = solve_relaxation_only(p, grid);
    for (const LaplaceResidual& r : check_laplace_identity(p, phi, kDefaultProbes)) {
      const bool pass = r.residual <= kLaplaceTolerance;
      all_pass = all_pass && pass;
      table.rows.push_back({format_label(nu), format_label(r.s), format_number(r.phi_transform),
                            format_number(r.psi_transform), format_number(r.predicted),
                            format_number(r.residual), format_number(kLaplaceTolerance),
                            pass_text(pass)});
    }
  }
  std::ostringstream note;
  note << "h=" << format_label(grid.h) << " T=" << format_number(grid.horizon());
  table.comments.push_back(note.str());
  emit(table, config, out);
  return all_pass ? kExitOk : kExitTolerance;
}

int figures(const RunConfig& config, std::ostream& out) {
  const std::filesystem::path dir = config.output_path.empty() ? "." : config.output_path;
  std::filesystem::create_directories(dir);

  struct Item {
    const char* name;
    bool relax;
    bool log;
    double t_max;
  };
  const Item items[] = {
      {"creep_linear.csv", false, false, kFigureCreepLinearTMax},
      {"creep_log.csv", false, true, kFigureCreepLogTMax},
      {"relax_linear.csv", true, false, kFigureRelaxTMax},
      {"relax_log.csv", true, true, kFigureRelaxTMax},
  };
  for (const Item& item : items) {
    RunConfig sub = config;
    sub.nu_list = config.effective_nu();
    sub.t_max = item.t_max;
    sub.format = Format::csv;
    sub.output_path = (dir / item.name).string();
    const Table table = item.relax ? relax_table(sub, item.log) : creep_table(sub, item.log);
    emit(table, sub, out);
    out << sub.output_path << '\n';
  }
  return kExitOk;
}

}  // namespace

std::vector<double> RunConfig::effective_nu() const {
  if (!nu_list.empty()) return nu_list;
  switch (subcommand) {
    case Subcommand::operator_check:
      return kOperatorNu;
    case Subcommand::laplace_check:
      return kLaplaceNu;
    default:
      return kFigureNu;
  }
}

double RunConfig::effective_t_max() const {
  if (t_max) return *t_max;
  switch (subcommand) {
    case Subcommand::creep:
      return 1e3;
    case Subcommand::laplace_check:
      return 30.0;
    default:
      return 50.0;
  }
}

void RunConfig::validate() const {
  const std::vector<double> nus = effective_nu();
  if (nus.empty()) throw DomainError("--nu needs at least one value");
  for (const double nu : nus) {
    if (!(nu > 0.0 && nu <= 1.0)) {
      throw DomainError("every --nu value must lie in (0, 1], got " + format_label(nu));
    }
  }
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("--q must be positive");
  if (!(tau0 > 0.0) || !std::isfinite(tau0)) throw DomainError("--tau0 must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("--h must be positive");
  const double horizon = effective_t_max();
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
    throw DomainError("--t-max must be non-negative");
  }
  if (subcommand == Subcommand::creep) {
    if (log_spacing && horizon == 0.0) {
      throw DomainError("--log-spacing needs --t-max > 0");
    }
    return;
  }
  if (subcommand == Subcommand::operator_check) return;
  if (horizon == 0.0 && subcommand != Subcommand::figures) {
    throw DomainError("--t-max must be positive for this subcommand");
  }
  if (subcommand == Subcommand::relax || subcommand == Subcommand::figures ||
      subcommand == Subcommand::laplace_check) {
    const double step =
        subcommand == Subcommand::relax ? relax_grid(*this).h : h;
    for (const double nu : nus) {
      const MaterialParameters p(q, 1.0, tau0, nu);
      if (!(q * std::pow(std::log1p(step / tau0), nu) < gamma(1.0 + nu))) {
        throw DomainError("step h=" + format_label(step) + " not admissible for nu=" +
                          format_label(nu) + "; need h < " + format_number(step_bound(p)));
      }
    }
  }
}

std::vector<double> creep_times(double t_max, bool log_spacing) {
  std::vector<double> times;
  if (log_spacing) {
    const double lo = std::log10(t_max) - kLogDecades;
    for (int i = 0; i < kLogSamples; ++i) {
      times.push_back(std::pow(10.0, lo + kLogDecades * i / (kLogSamples - 1)));
    }
    times.back() = t_max;
    return times;
  }
  if (t_max == 0.0) return {0.0};
  for (int i = 0; i <= kLinearIntervals; ++i) {
    times.push_back(t_max * i / kLinearIntervals);
  }
  return times;
}

Table creep_table(const RunConfig& config, bool log_spacing) {
  const std::vector<double> nus = config.effective_nu();
  Table table;
  table.header.push_back("t");
  std::vector<MaterialParameters> materials;
  for (const double nu : nus) {
    table.header.push_back("psi_nu=" + format_label(nu));
    materials.push_back(material(config, nu));
  }
  for (const double t : creep_times(config.effective_t_max(), log_spacing)) {
    std::vector<double> row{t};
    for (const auto& p : materials) row.push_back(creep_psi(p, t));
    table.add_row(row);
  }
  return table;
}

Table relax_table(const RunConfig& config, bool log_spacing) {
  const std::vector<double> nus = config.effective_nu();
  const UniformGrid grid = relax_grid(config);

  std::vector<std::future<SolverReport>> jobs;
  for (const double nu : nus) {
    const MaterialParameters p = material(config, nu);
    jobs.push_back(std::async(std::launch::async, [p, grid] { return solve_relaxation(p, grid); }));
  }
  std::vector<SolverReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());

  Table table;
  table.header.push_back("t");
  for (const double nu : nus) table.header.push_back("phi_nu=" + format_label(nu));

  std::vector<int> nodes;
  if (log_spacing) {
    nodes = log_nodes(grid);
  } else {
    for (int j = 0; j <= grid.n; ++j) nodes.push_back(j);
  }
  for (const int j : nodes) {
    std::vector<double> row{grid.time(j)};
    for (const auto& report : reports) row.push_back(report.solution.values[j]);
    table.add_row(row);
  }

  std::ostringstream head;
  head << "h=" << format_label(grid.h) << " n=" << grid.n << " q=" << format_label(config.q)
       << " tau0=" << format_label(config.tau0);
  if (grid.h != config.h) {
    head << " (requested h=" << format_label(config.h) << ", coarsened to at most "
         << kMaxRelaxSteps << " steps)";
  }
  table.comments.push_back(head.str());
  for (std::size_t i = 0; i < nus.size(); ++i) {
    table.comments.push_back("nu=" + format_label(nus[i]) +
                             " gamma=" + format_number(reports[i].gamma) +
                             " refinement_error=" + format_number(reports[i].refinement_error));
  }
  for (std::size_t i = 0; i < nus.size(); ++i) {
    table.comments.push_back("runtime nu=" + format_label(nus[i]) + ": " +
                             reports[i].runtime_note);
  }
  return table;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    switch (config.subcommand) {
      case Subcommand::creep:
        emit(creep_table(config, config.log_spacing), config, out);
        return kExitOk;
      case Subcommand::relax: {
        const UniformGrid grid = relax_grid(config);
        if (grid.h != config.h) {
          err << "note: h coarsened to " << format_label(grid.h) << " to keep at most "
              << kMaxRelaxSteps << " steps\n";
        }
        emit(relax_table(config, config.log_spacing), config, out);
        return kExitOk;
      }
      case Subcommand::operator_check: {
        const int code = operator_check(config, out);
        if (code != kExitOk) err << "operator-check: residuals above tolerance\n";
        return code;
      }
      case Subcommand::laplace_check: {
        const int code = laplace_check(config, out);
        if (code != kExitOk) err << "laplace-check: residuals above tolerance\n";
        return code;
      }
      case Subcommand::figures:
        return figures(config, out);
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitTolerance;
  }
  return kExitInvalid;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Lomnitz creep law: creep curves, relaxation solver and checks",
               "lomnitz"};
  app.require_subcommand(1);

  RunConfig config;
  double t_max = 0.0;
  std::vector<CLI::Option*> t_max_options;
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"table", Format::table}};

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--nu", config.nu_list, "Comma-separated orders in (0, 1]")->delimiter(',');
    sub->add_option("--q", config.q, "Creep amplitude q > 0");
    sub->add_option("--tau0", config.tau0, "Characteristic time tau0 > 0");
    sub->add_option("--h", config.h, "Relaxation solver step");
    t_max_options.push_back(sub->add_option("--t-max", t_max, "Time horizon"));
    sub->add_option("--out", config.output_path,
                    "Output file (figures: output directory); default stdout");
    sub->add_option("--format", config.format, "csv or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--log-spacing", config.log_spacing, "Log-spaced sample times");
  };

  const std::pair<const char*, Subcommand> subcommands[] = {
      {"creep", Subcommand::creep},
      {"relax", Subcommand::relax},
      {"operator-check", Subcommand::operator_check},
      {"laplace-check", Subcommand::laplace_check},
      {"figures", Subcommand::figures},
  };
  const std::map<std::string, const char*> descriptions{
      {"creep", "Dimensionless creep function psi_nu(t) as CSV"},
      {"relax", "Relaxation function phi_nu(t) from the Volterra solver as CSV"},
      {"operator-check", "Power-law and eigenfunction identities of the operator"},
      {"laplace-check", "Laplace-domain identity between creep and relaxation"},
      {"figures", "Creep and relaxation curves for nu = 0.25, 0.5, 0.75, 1"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> registered;
  for (const auto& [name, kind] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    add_common(sub);
    registered.emplace_back(sub, kind);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  for (const auto& [sub, kind] : registered) {
    if (sub->parsed()) config.subcommand = kind;
  }
  for (const CLI::Option* option : t_max_options) {
    if (option->count() > 0) config.t_max = t_max;
  }
  return run(config, out, err);
}

}  // namespace lomnitz::cli
