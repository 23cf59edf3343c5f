#include "nmtr/experiment.hpp"
#include "nmtr/nonmonotone.hpp"
#include "nmtr/problems.hpp"
#include "nmtr/profiles.hpp"
#include "nmtr/solver.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <span>

namespace py = pybind11;
using namespace nmtr;

PYBIND11_MODULE(_nmtr, m) {
  m.doc() = "Monotone and nonmonotone trust-region methods with a benchmark harness";

  py::enum_<Strategy>(m, "Strategy")
      .value("monotone", Strategy::monotone)
      .value("grippo", Strategy::grippo)
      .value("zhang_hager", Strategy::zhang_hager)
      .value("mo", Strategy::mo)
      .value("amini", Strategy::amini)
      .value("term1", Strategy::term1)
      .value("term2", Strategy::term2);

  py::enum_<RadiusRule>(m, "RadiusRule")
      .value("step_based", RadiusRule::step_based)
      .value("classic", RadiusRule::classic);

  py::enum_<RunStatus>(m, "RunStatus")
      .value("converged", RunStatus::converged)
      .value("max_iter", RunStatus::max_iter)
      .value("subproblem_failure", RunStatus::subproblem_failure)
      .value("numeric_failure", RunStatus::numeric_failure);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("strategy", &SolverConfig::strategy)
      .def_readwrite("radius_rule", &SolverConfig::radius_rule)
      .def_readwrite("mu1", &SolverConfig::mu1)
      .def_readwrite("mu2", &SolverConfig::mu2)
      .def_readwrite("rho1", &SolverConfig::rho1)
      .def_readwrite("rho2", &SolverConfig::rho2)
      .def_readwrite("c1", &SolverConfig::c1)
      .def_readwrite("c2", &SolverConfig::c2)
      .def_readwrite("epsilon", &SolverConfig::epsilon)
      .def_readwrite("k_max", &SolverConfig::k_max)
      .def_readwrite("window_N", &SolverConfig::window_N)
      .def_readwrite("eta0", &SolverConfig::eta0)
      .def_readwrite("eta_fixed", &SolverConfig::eta_fixed)
      .def_readwrite("delta0_scale", &SolverConfig::delta0_scale)
      .def_readwrite("keep_trace", &SolverConfig::keep_trace);

  py::class_<Problem>(m, "Problem")
      .def(py::init<>())
      .def_readwrite("name", &Problem::name)
      .def_readwrite("dim", &Problem::dim)
      .def_readwrite("x0", &Problem::x0)
      .def_readwrite("f_star", &Problem::f_star)
      .def_readwrite("x_star", &Problem::x_star)
      .def_readwrite("eval_f", &Problem::eval_f)
      .def_readwrite("eval_grad", &Problem::eval_grad)
      .def("f", [](const Problem& p, const Vec& x) { return p.eval_f(x); })
      .def("grad", [](const Problem& p, const Vec& x) { return p.eval_grad(x); });

  py::class_<IterateRecord>(m, "IterateRecord")
      .def_readonly("k", &IterateRecord::k)
      .def_readonly("x", &IterateRecord::x)
      .def_readonly("f", &IterateRecord::f)
      .def_readonly("grad_norm", &IterateRecord::grad_norm)
      .def_readonly("delta", &IterateRecord::delta)
      .def_readonly("T", &IterateRecord::T)
      .def_readonly("flk", &IterateRecord::flk)
      .def_readonly("ratio", &IterateRecord::ratio)
      .def_readonly("accepted", &IterateRecord::accepted);

  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("problem_name", &RunRecord::problem_name)
      .def_readonly("solver_name", &RunRecord::solver_name)
      .def_readonly("n_iter", &RunRecord::n_iter)
      .def_readonly("n_feval", &RunRecord::n_feval)
      .def_readonly("n_geval", &RunRecord::n_geval)
      .def_readonly("final_f", &RunRecord::final_f)
      .def_readonly("final_grad_norm", &RunRecord::final_grad_norm)
      .def_readonly("status", &RunRecord::status)
      .def_readonly("trace", &RunRecord::trace)
      .def_readonly("cauchy_violations", &RunRecord::cauchy_violations)
      .def_readonly("sandwich_lower_violations", &RunRecord::sandwich_lower_violations)
      .def_readonly("sandwich_upper_violations", &RunRecord::sandwich_upper_violations)
      .def_readonly("flk_increase_violations", &RunRecord::flk_increase_violations)
      .def_readonly("acceptance_violations", &RunRecord::acceptance_violations)
      .def_readonly("bfgs_skips", &RunRecord::bfgs_skips);

  py::class_<SolverOutcome>(m, "SolverOutcome")
      .def_readonly("run", &SolverOutcome::run)
      .def_readonly("x", &SolverOutcome::x);

  m.def("minimize", &minimize, py::arg("problem"), py::arg("config") = SolverConfig{});

  m.def("get_problem", &problems::get_problem, py::arg("name"), py::arg("dim") = 0);
  m.def("list_suite", &problems::list_suite, py::arg("tag"));
  m.def("registered_names", &problems::registered_names);
  m.def("gradient_check", &problems::gradient_check, py::arg("problem"),
        py::arg("points") = 10, py::arg("seed") = 20240901u);

  m.def("solver_roster", &experiment::solver_roster);
  m.def("solver_preset", &experiment::solver_preset, py::arg("name"));

  m.def("tbar_weights", [](const std::vector<double>& etas) {
    return tbar_weights(std::span<const double>(etas));
  });
  m.def("tbar_direct", [](const std::vector<double>& fs, const std::vector<double>& etas) {
    return tbar_direct(std::span<const double>(fs), std::span<const double>(etas));
  });
  m.def("eta_schedule", &eta_schedule, py::arg("eta_prev"), py::arg("eta_prev2"),
        py::arg("k"));
  m.def("mixed_measure", &profiles::mixed_measure, py::arg("nf"), py::arg("ng"));

  m.def(
      "performance_profile",
      [](const Eigen::MatrixXd& t, const std::vector<std::vector<bool>>& failed,
         const std::vector<std::string>& problems, const std::vector<std::string>& solvers,
         int points) {
        profiles::ProfileMatrix pm{problems, solvers, t, failed};
        const profiles::RatioMatrix rm = profiles::performance_ratios(pm);
        const std::vector<double> taus = profiles::tau_grid(rm.r_failed, points);
        py::dict out;
        out["ratios"] = rm.r;
        out["r_failed"] = rm.r_failed;
        out["problems"] = rm.problems;
        out["dropped"] = rm.dropped;
        out["taus"] = taus;
        out["rho"] = profiles::profile_curve(rm, taus);
        return out;
      },
      py::arg("t"), py::arg("failed"), py::arg("problems"), py::arg("solvers"),
      py::arg("points") = 200);
}
