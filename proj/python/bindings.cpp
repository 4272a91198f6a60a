#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mobb/dual.hpp"
#include "mobb/errors.hpp"
#include "mobb/harness.hpp"
#include "mobb/pareto.hpp"
#include "mobb/problem.hpp"
#include "mobb/solver.hpp"
#include "mobb/surrogate.hpp"

namespace py = pybind11;
using namespace mobb;

namespace {

RunRecord run_with(const Problem& p, const Vector& x0, SolverConfig cfg, Algorithm algo) {
  cfg.algorithm = algo;
  py::gil_scoped_release release;
  return run_solver(p, x0, cfg);
}

Dominance dominance_of(bool weak) { return weak ? Dominance::kWeakPareto : Dominance::kPareto; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiobjective BB quasi-Newton solvers, benchmark problems and tools";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<UnknownProblemError>(m, "UnknownProblemError", base.ptr());
  py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", base.ptr());
  py::register_exception<NonFiniteEvaluationError>(m, "NonFiniteEvaluationError", base.ptr());
  py::register_exception<DualSolverError>(m, "DualSolverError", base.ptr());
  py::register_exception<LineSearchError>(m, "LineSearchError", base.ptr());

  py::class_<Problem>(m, "Problem")
      .def_property_readonly("name", &Problem::name)
      .def_property_readonly("num_objectives", &Problem::num_objectives)
      .def_property_readonly("dim", &Problem::dim)
      .def_property_readonly("lower", &Problem::lower)
      .def_property_readonly("upper", &Problem::upper)
      .def_property_readonly("convex", &Problem::convex)
      .def("values", &Problem::values, py::arg("x"))
      .def("jacobian", &Problem::jacobian, py::arg("x"))
      .def("evaluate",
           [](const Problem& p, const Vector& x) {
             auto ev = p.evaluate(x);
             return py::make_tuple(ev.values, ev.jacobian);
           },
           py::arg("x"), "Returns (values, jacobian).")
      .def("__repr__", [](const Problem& p) {
        return "<Problem " + p.name() + " m=" + std::to_string(p.num_objectives()) +
               " n=" + std::to_string(p.dim()) + ">";
      });

  m.def("get_problem", &get_problem, py::arg("name"), py::arg("variant_dim") = std::nullopt);
  m.def("problem_names", &problem_names);

  py::class_<DualSolution>(m, "DualSolution")
      .def_readonly("lambda_", &DualSolution::lambda)
      .def_readonly("g_lambda", &DualSolution::g_lambda)
      .def_readonly("direction", &DualSolution::direction)
      .def_readonly("theta", &DualSolution::theta)
      .def_readonly("dual_value", &DualSolution::dual_value);

  m.def("solve_dual", &solve_dual, py::arg("gradients"), py::arg("sigma"));
  m.def("solve_steepest", &solve_steepest, py::arg("gradients"));
  m.def("directional_max", &directional_max, py::arg("gradients"), py::arg("d"));
  m.def("project_to_simplex", &project_to_simplex, py::arg("v"));

  py::class_<SafeguardParams>(m, "SafeguardParams")
      .def(py::init<>())
      .def_readwrite("c0", &SafeguardParams::c0)
      .def_readwrite("c1", &SafeguardParams::c1)
      .def_readwrite("c2", &SafeguardParams::c2);

  py::enum_<IntervalPolicy>(m, "IntervalPolicy")
      .value("LOWER", IntervalPolicy::kLower)
      .value("MIDPOINT", IntervalPolicy::kMidpoint)
      .value("UPPER", IntervalPolicy::kUpper);

  py::class_<SurrogateState>(m, "SurrogateState")
      .def(py::init<>())
      .def_readwrite("sigma", &SurrogateState::sigma)
      .def_readonly("omega", &SurrogateState::omega)
      .def_property_readonly("branch",
                             [](const SurrogateState& s) { return std::string(to_string(s.branch)); })
      .def_readonly("stagnated", &SurrogateState::stagnated);

  m.def("compute_omega", &compute_omega, py::arg("gradients"),
        py::arg("params") = SafeguardParams{});
  m.def("update_sigma", &update_sigma, py::arg("state"), py::arg("s"), py::arg("y"),
        py::arg("lambda_"), py::arg("f_old"), py::arg("f_new"), py::arg("omega"),
        py::arg("policy") = IntervalPolicy::kMidpoint);
  m.def("modified_secant", &modified_secant, py::arg("s"), py::arg("y"), py::arg("lambda_"),
        py::arg("f_old"), py::arg("f_new"));

  py::enum_<Algorithm>(m, "Algorithm")
      .value("BBDQN", Algorithm::kBBDQN)
      .value("MBFGSMO", Algorithm::kMBFGSMO)
      .value("SDMO", Algorithm::kSDMO);

  py::class_<WolfeParams>(m, "WolfeParams")
      .def(py::init<>())
      .def_readwrite("sigma1", &WolfeParams::sigma1)
      .def_readwrite("sigma2", &WolfeParams::sigma2)
      .def_readwrite("max_trials", &WolfeParams::max_trials);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("algorithm", &SolverConfig::algorithm)
      .def_readwrite("epsilon", &SolverConfig::epsilon)
      .def_readwrite("max_iter", &SolverConfig::max_iter)
      .def_readwrite("wolfe", &SolverConfig::wolfe)
      .def_readwrite("safeguard", &SolverConfig::safeguard)
      .def_readwrite("policy", &SolverConfig::policy)
      .def_readwrite("sdmo_armijo_only", &SolverConfig::sdmo_armijo_only)
      .def("validate", &SolverConfig::validate);

  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("problem", &RunRecord::problem)
      .def_readonly("algorithm", &RunRecord::algorithm)
      .def_readonly("seed", &RunRecord::seed)
      .def_readonly("x0", &RunRecord::x0)
      .def_readonly("x_final", &RunRecord::x_final)
      .def_readonly("f_final", &RunRecord::f_final)
      .def_readonly("iterations", &RunRecord::iterations)
      .def_readonly("steps", &RunRecord::steps)
      .def_readonly("fevals", &RunRecord::fevals)
      .def_readonly("time_ns", &RunRecord::time_ns)
      .def_property_readonly("status",
                             [](const RunRecord& r) { return std::string(to_string(r.status)); })
      .def_readonly("final_norm_d", &RunRecord::final_norm_d)
      .def_readonly("sigma_final", &RunRecord::sigma_final)
      .def_readonly("bfgs_resets", &RunRecord::bfgs_resets)
      .def_readonly("message", &RunRecord::message)
      .def_property_readonly("converged", &RunRecord::converged);

  m.def("run_bbdqn",
        [](const Problem& p, const Vector& x0, const SolverConfig& c) {
          return run_with(p, x0, c, Algorithm::kBBDQN);
        },
        py::arg("problem"), py::arg("x0"), py::arg("config") = SolverConfig{});
  m.def("run_mbfgsmo",
        [](const Problem& p, const Vector& x0, const SolverConfig& c) {
          return run_with(p, x0, c, Algorithm::kMBFGSMO);
        },
        py::arg("problem"), py::arg("x0"), py::arg("config") = SolverConfig{});
  m.def("run_sdmo",
        [](const Problem& p, const Vector& x0, const SolverConfig& c) {
          return run_with(p, x0, c, Algorithm::kSDMO);
        },
        py::arg("problem"), py::arg("x0"), py::arg("config") = SolverConfig{});

  py::class_<FrontPoint>(m, "FrontPoint")
      .def_readonly("x", &FrontPoint::x)
      .def_readonly("f", &FrontPoint::f)
      .def_property_readonly("source",
                             [](const FrontPoint& p) { return std::string(to_string(p.source)); });

  m.def("dominates",
        [](const Vector& p, const Vector& q, bool weak) { return dominates(p, q, dominance_of(weak)); },
        py::arg("p"), py::arg("q"), py::arg("weak") = false);
  m.def("nondominated_filter",
        [](const std::vector<Vector>& pts, bool weak) {
          return nondominated_filter(pts, dominance_of(weak));
        },
        py::arg("points"), py::arg("weak") = false);
  m.def("grid_reference_front", &grid_reference_front, py::arg("problem"),
        py::arg("resolution") = 500);
  m.def("grid_cell_objective_diameter", &grid_cell_objective_diameter, py::arg("problem"),
        py::arg("resolution"), py::arg("front"));
  m.def("distance_to_front", &distance_to_front, py::arg("f"), py::arg("front"));

  m.def("derive_start_seed", &derive_start_seed);
  m.def("sample_initial_points",
        py::overload_cast<const Problem&, int, std::uint64_t>(&sample_initial_points),
        py::arg("problem"), py::arg("count"), py::arg("seed"));

  py::class_<SummaryRow>(m, "SummaryRow")
      .def_readonly("problem", &SummaryRow::problem)
      .def_readonly("algorithm", &SummaryRow::algorithm)
      .def_readonly("runs", &SummaryRow::runs)
      .def_readonly("converged", &SummaryRow::converged)
      .def_readonly("nf", &SummaryRow::nf)
      .def_readonly("mean_iter", &SummaryRow::mean_iter)
      .def_readonly("mean_feval", &SummaryRow::mean_feval)
      .def_readonly("mean_time_ms", &SummaryRow::mean_time_ms);

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("records", &ExperimentResult::records)
      .def_readonly("summary", &ExperimentResult::summary);

  m.def(
      "run_experiment",
      [](const std::vector<std::string>& problems, const std::vector<Algorithm>& algorithms,
         int starts, std::uint64_t seed, const SolverConfig& solver, bool include_failures,
         int threads) {
        ExperimentConfig c;
        for (const auto& name : problems) c.problems.push_back({name, std::nullopt});
        c.algorithms = algorithms;
        c.starts_per_problem = starts;
        c.master_seed = seed;
        c.solver = solver;
        c.threads = threads;
        py::gil_scoped_release release;
        return run_experiment(c, include_failures);
      },
      py::arg("problems"),
      py::arg("algorithms") = std::vector<Algorithm>{Algorithm::kBBDQN, Algorithm::kMBFGSMO},
      py::arg("starts") = 200, py::arg("seed") = 7, py::arg("solver") = SolverConfig{},
      py::arg("include_failures") = false, py::arg("threads") = 0);
}
