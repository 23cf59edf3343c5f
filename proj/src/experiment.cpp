#include "nmtr/experiment.hpp"

#include "nmtr/nonmonotone.hpp"
#include "nmtr/problems.hpp"
#include "nmtr/solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace nmtr::experiment {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<std::string> solver_roster() {
  return {"ttr", "nmtr-g", "nmtr-h", "nmtr-n", "nmtr-m", "nmtr-1", "nmtr-2"};
}

SolverConfig solver_preset(const std::string& name) {
  SolverConfig cfg;
  if (name == "ttr") {
    cfg.strategy = Strategy::monotone;
  } else if (name == "nmtr-g") {
    cfg.strategy = Strategy::grippo;
  } else if (name == "nmtr-h") {
    cfg.strategy = Strategy::zhang_hager;
    cfg.eta_fixed = 0.85;
  } else if (name == "nmtr-n") {
    cfg.strategy = Strategy::amini;
    cfg.eta0 = 0.25;
  } else if (name == "nmtr-m") {
    cfg.strategy = Strategy::mo;
    cfg.eta0 = 0.25;
  } else if (name == "nmtr-1") {
    cfg.strategy = Strategy::term1;
    cfg.eta0 = 0.25;
  } else if (name == "nmtr-2") {
    cfg.strategy = Strategy::term2;
    cfg.eta0 = 0.45;
  } else {
    throw std::invalid_argument("unknown solver: " + name);
  }
  return cfg;
}

namespace {

RadiusRule parse_rule(const std::string& s) {
  if (s == "step_based") return RadiusRule::step_based;
  if (s == "classic") return RadiusRule::classic;
  throw std::invalid_argument("unknown radius rule: " + s);
}

RunStatus parse_status(const std::string& s) {
  if (s == "converged") return RunStatus::converged;
  if (s == "max_iter") return RunStatus::max_iter;
  if (s == "subproblem_failure") return RunStatus::subproblem_failure;
  if (s == "numeric_failure") return RunStatus::numeric_failure;
  throw std::invalid_argument("unknown run status: " + s);
}

SolverOverrides parse_overrides(const json& j, const std::string& solver) {
  SolverOverrides o;
  for (const auto& [key, val] : j.items()) {
    if (key == "eta0") o.eta0 = val.get<double>();
    else if (key == "N") o.window_N = val.get<long>();
    else if (key == "radius_rule") o.radius_rule = parse_rule(val.get<std::string>());
    else if (key == "eta_fixed") o.eta_fixed = val.get<double>();
    else if (key == "delta0_scale") o.delta0_scale = val.get<double>();
    else throw std::invalid_argument("unknown override key '" + key + "' for " + solver);
  }
  return o;
}

SolverConfig resolve_config(const ExperimentConfig& cfg, const std::string& solver) {
  SolverConfig sc = solver_preset(solver);
  sc.epsilon = cfg.epsilon;
  sc.k_max = cfg.k_max;
  sc.keep_trace = cfg.traces;
  auto it = cfg.overrides.find(solver);
  if (it != cfg.overrides.end()) {
    const SolverOverrides& o = it->second;
    if (o.eta0) sc.eta0 = *o.eta0;
    if (o.window_N) sc.window_N = *o.window_N;
    if (o.radius_rule) sc.radius_rule = *o.radius_rule;
    if (o.eta_fixed) sc.eta_fixed = *o.eta_fixed;
    if (o.delta0_scale) sc.delta0_scale = *o.delta0_scale;
  }
  validate_config(sc);
  return sc;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");

  ExperimentConfig cfg;
  for (const auto& [key, val] : j.items()) {
    if (key == "suite") cfg.suite = val.get<std::string>();
    else if (key == "solvers") cfg.solvers = val.get<std::vector<std::string>>();
    else if (key == "epsilon") cfg.epsilon = val.get<double>();
    else if (key == "k_max") cfg.k_max = val.get<long>();
    else if (key == "out_dir") cfg.out_dir = val.get<std::string>();
    else if (key == "workers") cfg.workers = val.get<int>();
    else if (key == "traces") cfg.traces = val.get<bool>();
    else if (key == "overrides") {
      if (!val.is_object()) throw std::invalid_argument("overrides must be an object");
      for (const auto& [solver, ov] : val.items())
        cfg.overrides[solver] = parse_overrides(ov, solver);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  if (cfg.solvers.empty()) throw std::invalid_argument("config lists no solvers");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (!(cfg.epsilon > 0)) throw std::invalid_argument("epsilon must be > 0");
  for (const std::string& s : cfg.solvers) solver_preset(s);  // name check
  for (const auto& [s, o] : cfg.overrides)
    if (std::find(cfg.solvers.begin(), cfg.solvers.end(), s) == cfg.solvers.end())
      throw std::invalid_argument("override for solver not in run list: " + s);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ExperimentResult run_suite(const ExperimentConfig& cfg) {
  const std::vector<Problem> probs = problems::list_suite(cfg.suite);
  std::vector<SolverConfig> scfgs;
  scfgs.reserve(cfg.solvers.size());
  for (const std::string& s : cfg.solvers) scfgs.push_back(resolve_config(cfg, s));

  ExperimentResult res;
  for (const Problem& p : probs) res.problems.push_back(p.name);
  res.solvers = cfg.solvers;

  const size_t ns = cfg.solvers.size(), total = probs.size() * ns;
  res.runs.resize(total);

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      const size_t pi = i / ns, si = i % ns;
      RunRecord& slot = res.runs[i];
      try {
        slot = minimize(probs[pi], scfgs[si]).run;
      } catch (const std::exception&) {
        slot = RunRecord{};
        slot.problem_name = probs[pi].name;
        slot.status = RunStatus::numeric_failure;
      }
      slot.solver_name = cfg.solvers[si];
    }
  };

  const size_t workers = std::min<size_t>(std::max(cfg.workers, 1), std::max<size_t>(total, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return res;
}

void write_results_csv(const std::vector<RunRecord>& runs, std::ostream& os) {
  os << "problem,solver,ng,nf,status\n";
  for (const RunRecord& r : runs)
    os << r.problem_name << ',' << r.solver_name << ',' << r.n_geval << ',' << r.n_feval
       << ',' << to_string(r.status) << '\n';
}

std::vector<RunRecord> read_results_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "problem,solver,ng,nf,status")
    throw std::invalid_argument("results csv: bad or missing header");
  std::vector<RunRecord> runs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) parts.push_back(field);
    if (parts.size() != 5) throw std::invalid_argument("results csv: bad row: " + line);
    RunRecord r;
    r.problem_name = parts[0];
    r.solver_name = parts[1];
    size_t used = 0;
    r.n_geval = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("results csv: bad ng: " + line);
    r.n_feval = std::stol(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("results csv: bad nf: " + line);
    r.status = parse_status(parts[4]);
    runs.push_back(std::move(r));
  }
  if (runs.empty()) throw std::invalid_argument("results csv: no data rows");
  return runs;
}

profiles::ProfileMatrix build_matrix(const std::vector<RunRecord>& runs,
                                     const std::string& measure) {
  if (measure != "ng" && measure != "nf" && measure != "mixed")
    throw std::invalid_argument("unknown measure: " + measure);
  profiles::ProfileMatrix m;
  std::map<std::string, Eigen::Index> pidx, sidx;
  for (const RunRecord& r : runs) {
    if (pidx.emplace(r.problem_name, static_cast<Eigen::Index>(m.problems.size())).second)
      m.problems.push_back(r.problem_name);
    if (sidx.emplace(r.solver_name, static_cast<Eigen::Index>(m.solvers.size())).second)
      m.solvers.push_back(r.solver_name);
  }
  const Eigen::Index np = static_cast<Eigen::Index>(m.problems.size());
  const Eigen::Index ns = static_cast<Eigen::Index>(m.solvers.size());
  m.t = Eigen::MatrixXd::Constant(np, ns, -1.0);
  m.failed.assign(static_cast<size_t>(np), std::vector<bool>(static_cast<size_t>(ns), true));
  for (const RunRecord& r : runs) {
    const Eigen::Index i = pidx[r.problem_name], j = sidx[r.solver_name];
    if (m.t(i, j) >= 0)
      throw std::invalid_argument("duplicate run for " + r.problem_name + "/" + r.solver_name);
    double t = 0;
    if (measure == "ng") t = static_cast<double>(r.n_geval);
    else if (measure == "nf") t = static_cast<double>(r.n_feval);
    else t = profiles::mixed_measure(static_cast<double>(r.n_feval),
                                     static_cast<double>(r.n_geval));
    m.t(i, j) = std::max(t, 1.0);  // guard degenerate zero counts
    m.failed[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        r.status != RunStatus::converged;
  }
  for (Eigen::Index i = 0; i < np; ++i)
    for (Eigen::Index j = 0; j < ns; ++j)
      if (m.t(i, j) < 0)
        throw std::invalid_argument("missing run for " + m.problems[static_cast<size_t>(i)] +
                                    "/" + m.solvers[static_cast<size_t>(j)]);
  return m;
}

void write_profile_csv(const profiles::RatioMatrix& m, const std::vector<double>& taus,
                       const std::vector<std::vector<double>>& rho, std::ostream& os) {
  if (rho.size() != m.solvers.size())
    throw std::invalid_argument("profile rows do not match solver count");
  os << "solver,tau,rho\n";
  for (size_t j = 0; j < m.solvers.size(); ++j) {
    if (rho[j].size() != taus.size())
      throw std::invalid_argument("profile row length does not match tau grid");
    for (size_t ti = 0; ti < taus.size(); ++ti)
      os << m.solvers[j] << ',' << fmt17(taus[ti]) << ',' << fmt17(rho[j][ti]) << '\n';
  }
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  try {
    fs::create_directories(cfg.out_dir);
    const ExperimentResult res = run_suite(cfg);

    const fs::path out(cfg.out_dir);
    {
      std::ofstream os(out / "results.csv", std::ios::binary);
      write_results_csv(res.runs, os);
      if (!os) throw std::runtime_error("cannot write results.csv");
    }
    if (cfg.traces) {
      for (const RunRecord& r : res.runs) {
        std::ofstream os(out / ("trace_" + r.problem_name + "_" + r.solver_name + ".csv"),
                         std::ios::binary);
        write_trace_csv(r, os);
        if (!os) throw std::runtime_error("cannot write trace for " + r.problem_name);
      }
    }
    long converged = 0;
    for (const RunRecord& r : res.runs)
      if (r.status == RunStatus::converged) ++converged;
    log << "ran " << res.runs.size() << " runs (" << converged << " converged) on suite '"
        << cfg.suite << "'\n";

    for (const char* measure : {"ng", "nf", "mixed"}) {
      try {
        const auto matrix = build_matrix(res.runs, measure);
        const auto ratios = profiles::performance_ratios(matrix);
        for (const std::string& dropped : ratios.dropped)
          log << "warning: " << dropped << " failed on every solver; dropped from the "
              << measure << " profile\n";
        const auto taus = profiles::tau_grid(ratios.r_failed);
        const auto rho = profiles::profile_curve(ratios, taus);
        std::ofstream os(out / (std::string("profiles_") + measure + ".csv"),
                         std::ios::binary);
        write_profile_csv(ratios, taus, rho, os);
        if (!os) throw std::runtime_error("cannot write profile csv");
      } catch (const std::invalid_argument& e) {
        log << "warning: skipping " << measure << " profile: " << e.what() << "\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

void check_window_properties(VerifyReport& rep) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> fdist(-10.0, 10.0);
  std::uniform_real_distribution<double> edist(0.0, std::nextafter(1.0, 0.0));
  std::uniform_int_distribution<long> ndist(1, 10);

  double worst_diff = 0, worst_sum = 0, worst_neg = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const long N = ndist(rng);
    const long steps = N + ndist(rng);  // exercise both growth and sliding
    SolverConfig cfg;
    cfg.window_N = N;
    NonmonotoneState st = nm_init(Strategy::term1, fdist(rng), cfg);
    std::vector<double> fs{st.f_window[0]}, etas;
    for (long s = 0; s < steps; ++s) {
      const double f = fdist(rng), eta = edist(rng);
      nm_update(st, f, eta);
      fs.push_back(f);
      etas.push_back(eta);
    }
    // Direct evaluation over the trailing window of N+1 values.
    const size_t L = std::min<size_t>(fs.size(), static_cast<size_t>(N) + 1);
    std::span<const double> fw(fs.data() + fs.size() - L, L);
    std::span<const double> ew(etas.data() + etas.size() - (L - 1), L - 1);
    const double direct = tbar_direct(fw, ew);
    worst_diff = std::max(worst_diff,
                          std::abs(direct - st.tbar) / std::max(1.0, std::abs(direct)));
    const std::vector<double> w = tbar_weights(ew);
    double sum = 0;
    for (double wi : w) {
      sum += wi;
      worst_neg = std::min(worst_neg, wi);
    }
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  rep.rows.push_back({"window-term recursion", "1000 random windows", worst_diff <= 1e-12,
                      "max rel diff direct vs recursive = " + fmt17(worst_diff)});
  rep.rows.push_back({"window-term weights", "1000 random windows",
                      worst_sum <= 1e-14 && worst_neg >= 0.0,
                      "max |sum-1| = " + fmt17(worst_sum) +
                          ", min weight = " + fmt17(worst_neg)});
}

}  // namespace

VerifyReport verify_problems(const std::vector<Problem>& probs) {
  VerifyReport rep;
  for (const Problem& p : probs) {
    const double err = problems::gradient_check(p);
    rep.rows.push_back({"gradient", p.name, err <= 1e-6, "max rel err = " + fmt17(err)});
  }
  check_window_properties(rep);

  for (const std::string& solver : solver_roster()) {
    SolverConfig sc = solver_preset(solver);
    sc.keep_trace = false;
    for (const Problem& p : probs) {
      const RunRecord run = minimize(p, sc).run;
      const long violations = run.cauchy_violations + run.sandwich_lower_violations +
                              run.sandwich_upper_violations + run.flk_increase_violations +
                              run.acceptance_violations;
      const bool counting =
          (run.status != RunStatus::converged && run.status != RunStatus::max_iter) ||
          (run.n_geval == run.n_iter + 1 && run.n_feval >= run.n_iter + 1 &&
           (run.status == RunStatus::converged) == (run.final_grad_norm < sc.epsilon));
      std::string detail = to_string(run.status);
      if (violations > 0)
        detail += ", violations: cauchy=" + std::to_string(run.cauchy_violations) +
                  " sandwich=" + std::to_string(run.sandwich_lower_violations) + "/" +
                  std::to_string(run.sandwich_upper_violations) +
                  " flk=" + std::to_string(run.flk_increase_violations) +
                  " accept=" + std::to_string(run.acceptance_violations);
      if (!counting) detail += ", counter bookkeeping broken";
      rep.rows.push_back(
          {"run-invariants", p.name + "/" + solver, violations == 0 && counting, detail});
    }
  }
  return rep;
}

VerifyReport verify_suite(const std::string& tag) {
  return verify_problems(problems::list_suite(tag));
}

void print_report(const VerifyReport& r, std::ostream& os) {
  size_t passed = 0;
  for (const auto& row : r.rows) {
    os << (row.pass ? "PASS" : "FAIL") << "  " << row.check << "  " << row.subject;
    if (!row.detail.empty()) os << "  (" << row.detail << ")";
    os << "\n";
    if (row.pass) ++passed;
  }
  os << passed << "/" << r.rows.size() << " checks passed\n";
}

bool VerifyReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

}  // namespace nmtr::experiment
