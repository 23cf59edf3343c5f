#pragma once

#include "nmtr/profiles.hpp"
#include "nmtr/types.hpp"

#include <iosfwd>
#include <map>

namespace nmtr::experiment {

struct SolverOverrides {
  std::optional<double> eta0;
  std::optional<long> window_N;
  std::optional<RadiusRule> radius_rule;
  std::optional<double> eta_fixed;
  std::optional<double> delta0_scale;
};

struct ExperimentConfig {
  std::string suite = "table1";
  std::vector<std::string> solvers = {"ttr", "nmtr-1", "nmtr-2"};
  double epsilon = 1e-5;
  long k_max = 10000;
  std::map<std::string, SolverOverrides> overrides;  // keyed by solver name
  std::string out_dir = "out";
  int workers = 1;
  bool traces = true;
};

// Roster: ttr, nmtr-g, nmtr-h, nmtr-n, nmtr-m, nmtr-1, nmtr-2.
std::vector<std::string> solver_roster();
SolverConfig solver_preset(const std::string& name);

// Parse a JSON experiment file. Throws std::invalid_argument on bad content.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

struct ExperimentResult {
  std::vector<std::string> problems;
  std::vector<std::string> solvers;
  std::vector<RunRecord> runs;  // problem-major, solver order as configured
};

// Run the full problem x solver matrix, optionally on a worker pool. The
// result order is independent of the worker count.
ExperimentResult run_suite(const ExperimentConfig& cfg);

// run_suite + results.csv, per-run trace CSVs and the three profile CSVs
// under cfg.out_dir. Returns 0 on success, 1 on config/IO errors.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

void write_results_csv(const std::vector<RunRecord>& runs, std::ostream& os);
std::vector<RunRecord> read_results_csv(std::istream& is);  // throws on bad rows

profiles::ProfileMatrix build_matrix(const std::vector<RunRecord>& runs,
                                     const std::string& measure);  // ng|nf|mixed
void write_profile_csv(const profiles::RatioMatrix& m, const std::vector<double>& taus,
                       const std::vector<std::vector<double>>& rho, std::ostream& os);

struct VerifyReport {
  struct Row {
    std::string check;
    std::string subject;
    bool pass = false;
    std::string detail;
  };
  std::vector<Row> rows;
  bool all_pass() const;
};

// Gradient checks per problem, windowed-term direct/recursive agreement, and
// invariant counters over solver runs of the suite.
VerifyReport verify_suite(const std::string& tag);
VerifyReport verify_problems(const std::vector<Problem>& probs);
void print_report(const VerifyReport& r, std::ostream& os);

}  // namespace nmtr::experiment
