#include "nmtr/experiment.hpp"
#include "nmtr/profiles.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nmtr;

int main(int argc, char** argv) {
  CLI::App app{"Trust-region solver benchmark harness"};
  app.require_subcommand(1);

  std::string config_path, out_override;
  int workers_override = 0;
  CLI::App* run = app.add_subcommand("run", "Run a solver x problem matrix from a JSON config");
  run->add_option("--config", config_path, "JSON experiment config")->required();
  run->add_option("--out", out_override, "Output directory (overrides the config)");
  run->add_option("--workers", workers_override, "Worker threads (overrides the config)")
      ->check(CLI::PositiveNumber);

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "Gradient and solver-invariant checks");
  verify->add_option("--suite", suite, "Suite tag: table1 | classic | all");

  std::string results_path, measure;
  CLI::App* profile = app.add_subcommand("profile", "Performance profile from a results CSV");
  profile->add_option("--results", results_path, "results.csv produced by run")->required();
  profile->add_option("--measure", measure, "Cost measure")
      ->required()
      ->check(CLI::IsMember({"ng", "nf", "mixed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // 1 for any usage problem, 0 for --help
  }

  try {
    if (run->parsed()) {
      experiment::ExperimentConfig cfg = experiment::load_config(config_path);
      if (!out_override.empty()) cfg.out_dir = out_override;
      if (workers_override > 0) cfg.workers = workers_override;
      return experiment::run_experiment(cfg, std::cout);
    }
    if (verify->parsed()) {
      const experiment::VerifyReport rep = experiment::verify_suite(suite);
      experiment::print_report(rep, std::cout);
      return rep.all_pass() ? 0 : 2;
    }
    // profile
    std::ifstream in(results_path);
    if (!in) throw std::invalid_argument("cannot open results file: " + results_path);
    const auto runs = experiment::read_results_csv(in);
    const auto matrix = experiment::build_matrix(runs, measure);
    const auto ratios = profiles::performance_ratios(matrix);
    for (const std::string& dropped : ratios.dropped)
      std::cerr << "warning: " << dropped << " failed on every solver; dropped\n";
    const auto taus = profiles::tau_grid(ratios.r_failed);
    const auto rho = profiles::profile_curve(ratios, taus);
    experiment::write_profile_csv(ratios, taus, rho, std::cout);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
