#include <algorithm>
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skqaoa/baselines.hpp"
#include "skqaoa/closed_forms.hpp"
#include "skqaoa/error.hpp"
#include "skqaoa/evaluator.hpp"
#include "skqaoa/fixtures.hpp"
#include "skqaoa/optimizer.hpp"
#include "skqaoa/simulator.hpp"

namespace py = pybind11;
using namespace skqaoa;

namespace {

QaoaParams make_params(std::vector<double> gamma, std::vector<double> beta) {
  QaoaParams p{std::move(gamma), std::move(beta)};
  p.validate();
  return p;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::residue_violation: return "residue_violation";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::memory_cap: return "memory_cap";
    case ErrorKind::eigen_not_converged: return "eigen_not_converged";
    case ErrorKind::non_finite: return "non_finite";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Infinite-size QAOA energies on the SK model";
  m.attr("__version__") = SKQAOA_VERSION;

  static py::exception<Error> sk_error(m, "SkqaoaError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::invalid_argument) {
        PyErr_SetString(PyExc_ValueError, e.what());
        return;
      }
      py::object exc = py::handle(sk_error.ptr())(e.what());
      exc.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(sk_error.ptr(), exc.ptr());
    }
  });

  py::class_<QaoaParams>(m, "QaoaParams")
      .def(py::init(&make_params), py::arg("gamma"), py::arg("beta"))
      .def_readwrite("gamma", &QaoaParams::gamma)
      .def_readwrite("beta", &QaoaParams::beta)
      .def_property_readonly("p", &QaoaParams::depth)
      .def("negated", &QaoaParams::negated)
      .def("__eq__", [](const QaoaParams& a, const QaoaParams& b) { return a == b; })
      .def("__repr__", [](const QaoaParams& q) {
        return "QaoaParams(gamma=" + py::repr(py::cast(q.gamma)).cast<std::string>() +
               ", beta=" + py::repr(py::cast(q.beta)).cast<std::string>() + ")";
      });

  // configuration space
  m.def("partition_level", [](std::vector<int> spins) { return partition_level(from_spins(spins)); },
        "Level of a configuration given as (a_1..a_p, a_-p..a_-1).");
  m.def("star", [](std::vector<int> spins) { return to_spins(star(from_spins(spins))); });
  m.def("bar", [](std::vector<int> spins) { return to_spins(bar(from_spins(spins))); });
  m.def("ordered_d", [](int p) {
    const auto d = build_ordered_d(p);
    std::vector<std::vector<int>> out;
    for (auto c : d.members) out.push_back(to_spins({c, p}));
    return out;
  });
  m.def("level_sizes", [](int p) { return partition_levels(p).sizes; });

  // evaluator
  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("p", &EvalReport::p)
      .def_readonly("params", &EvalReport::params)
      .def_readonly("v_p", &EvalReport::v_p)
      .def_readonly("imag_residue", &EvalReport::imag_residue)
      .def_readonly("wall_seconds", &EvalReport::wall_seconds);
  m.def("evaluate_vp", &evaluate_vp, py::arg("params"), py::call_guard<py::gil_scoped_release>());
  m.def("vp_value", &vp_value, py::arg("params"), py::call_guard<py::gil_scoped_release>());
  m.def("second_moment_infinite", &second_moment_infinite, py::arg("params"));
  m.def("compute_w", [](const QaoaParams& params) { return compute_W(params).values; }, py::arg("params"),
        "W_a for every configuration, indexed by the 2p-bit code.");
  m.def("q_amplitude", [](std::vector<int> a, const QaoaParams& params) { return q_amplitude(from_spins(a), params); });

  // closed forms
  m.def("v1_finite_n", &v1_finite_n, py::arg("gamma"), py::arg("beta"), py::arg("n"));
  m.def("v1_infinite", &v1_infinite, py::arg("gamma"), py::arg("beta"));
  m.def("m2_p1_finite", &m2_p1_finite, py::arg("gamma"), py::arg("beta"), py::arg("n"));
  m.def("v2_infinite", &v2_infinite, py::arg("params"));

  // fixtures
  m.def("fixture", [](int p) -> py::object {
    auto row = find_fixture(p);
    if (!row) return py::none();
    return py::make_tuple(row->value, row->params);
  }, py::arg("p"), "(tabulated value, params) for 1 <= p <= 12, or None.");

  // optimizer
  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("p", &OptimizationResult::p)
      .def_readonly("best_params", &OptimizationResult::best_params)
      .def_readonly("best_value", &OptimizationResult::best_value)
      .def_readonly("starts_used", &OptimizationResult::starts_used)
      .def_readonly("converged_restarts", &OptimizationResult::converged_restarts)
      .def_readonly("seed", &OptimizationResult::seed)
      .def_property_readonly("restart_values", [](const OptimizationResult& r) {
        std::vector<double> v;
        for (const auto& o : r.restarts) v.push_back(o.value);
        return v;
      });
  m.def(
      "optimize_vp",
      [](int p, int n_starts, Seed seed, const std::string& strategy, std::optional<QaoaParams> initial,
         std::optional<QaoaParams> warm_from) {
        OptimizeOptions o;
        o.initial = std::move(initial);
        o.warm_from = std::move(warm_from);
        py::gil_scoped_release release;
        return optimize_vp(p, n_starts, seed, parse_strategy(strategy), o);
      },
      py::arg("p"), py::arg("n_starts") = 20, py::arg("seed") = 0, py::arg("strategy") = "multistart",
      py::arg("initial") = py::none(), py::arg("warm_from") = py::none());
  m.def("extrapolate_params", &extrapolate_params);
  m.def("canonicalize", [](const QaoaParams& q) { return skqaoa::canonicalize(q); });

  // simulator
  py::class_<SKInstance>(m, "SKInstance")
      .def_readonly("n", &SKInstance::n)
      .def_readonly("couplings", &SKInstance::couplings)
      .def_readonly("seed", &SKInstance::seed)
      .def_property_readonly("dist", [](const SKInstance& s) { return to_string(s.dist); })
      .def("cost", [](const SKInstance& s, std::vector<int> z) { return s.cost(z); });
  m.def("sample_instance", [](int n, const std::string& dist, Seed seed) {
    return sample_instance(n, parse_dist(dist), seed);
  }, py::arg("n"), py::arg("dist") = "gaussian", py::arg("seed") = 0);
  m.def("make_instance", &make_instance, py::arg("n"), py::arg("couplings"));
  m.def("cost_vector", [](const SKInstance& s) {
    auto c = cost_vector(s);
    py::array_t<double> out(static_cast<py::ssize_t>(c.size()));
    std::copy(c.begin(), c.end(), out.mutable_data());
    return out;
  });
  m.def("run_qaoa_expectation", &run_qaoa_expectation, py::call_guard<py::gil_scoped_release>());
  py::class_<EnsembleStats>(m, "EnsembleStats")
      .def_readonly("mean_energy", &EnsembleStats::mean_energy)
      .def_readonly("var_over_instances", &EnsembleStats::var_over_instances)
      .def_readonly("mean_second_moment", &EnsembleStats::mean_second_moment)
      .def_readonly("mean_quantum_variance", &EnsembleStats::mean_quantum_variance)
      .def_property_readonly("stderr_energy", &EnsembleStats::stderr_energy)
      .def_property_readonly("per_instance", [](const EnsembleStats& s) {
        std::vector<std::pair<double, double>> v;
        for (const auto& m : s.per_instance) v.emplace_back(m.mean_energy, m.second_moment);
        return v;
      });
  m.def("ensemble_stats", [](int n, const QaoaParams& params, int num_instances, const std::string& dist, Seed seed) {
    const auto d = parse_dist(dist);
    py::gil_scoped_release release;
    return ensemble_stats(n, params, num_instances, d, seed);
  }, py::arg("n"), py::arg("params"), py::arg("num_instances"), py::arg("dist") = "gaussian", py::arg("seed") = 0);

  // baselines
  m.def("simulated_annealing", [](const SKInstance& s, double t_start, double t_end, std::int64_t steps,
                                  const std::string& shape, Seed seed) {
    AnnealSchedule sched{t_start, t_end, steps, parse_schedule_shape(shape)};
    AnnealResult r;
    {
      py::gil_scoped_release release;
      r = simulated_annealing(s, sched, seed);
    }
    return py::make_tuple(r.spins, r.energy_density);
  }, py::arg("instance"), py::arg("t_start") = 1.3, py::arg("t_end") = 0.01, py::arg("steps") = 100000,
        py::arg("schedule") = "linear", py::arg("seed") = 0);
  m.def("zero_temp_descent", [](const SKInstance& s, Seed seed, int restarts) {
    py::gil_scoped_release release;
    return zero_temp_descent_best(s, restarts, seed).energy_density;
  }, py::arg("instance"), py::arg("seed") = 0, py::arg("restarts") = 1);
  m.def("spectral_round", [](const SKInstance& s, Seed seed) {
    py::gil_scoped_release release;
    return spectral_round(s, seed).energy_density;
  }, py::arg("instance"), py::arg("seed") = 0);

  m.attr("PARISI_VALUE") = kParisiValue;
}
