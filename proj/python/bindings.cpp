#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "lejasparse/benchmarks.hpp"
#include "lejasparse/distributions.hpp"
#include "lejasparse/leja.hpp"
#include "lejasparse/multiindex.hpp"
#include "lejasparse/postproc.hpp"
#include "lejasparse/sampling.hpp"
#include "lejasparse/sparse.hpp"
#include "lejasparse/univariate.hpp"

namespace py = pybind11;
using namespace lejasparse;

namespace {

ModelFn wrap_model(const py::function& f) {
  return [f](std::span<const double> y) {
    return f(std::vector<double>(y.begin(), y.end())).cast<double>();
  };
}

const char* kind_str(LejaKind k) {
  switch (k) {
    case LejaKind::unweighted: return "unweighted";
    case LejaKind::symmetric: return "symmetric";
    case LejaKind::weighted: return "weighted";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dimension-adaptive sparse interpolation on weighted Leja nodes";

  py::class_<Distribution>(m, "Distribution")
      .def_static("uniform", &Distribution::uniform, py::arg("a"), py::arg("b"))
      .def_static("normal", &Distribution::normal, py::arg("mu"), py::arg("sigma"))
      .def_static("truncated_normal", &Distribution::truncated_normal,
                  py::arg("mu"), py::arg("sigma"), py::arg("lower"), py::arg("upper"))
      .def_static("gumbel", &Distribution::gumbel, py::arg("location"), py::arg("scale"))
      .def("pdf", &Distribution::pdf)
      .def("cdf", &Distribution::cdf)
      .def("icdf", &Distribution::icdf)
      .def("sample", &Distribution::sample)
      .def("support",
           [](const Distribution& d) {
             const Interval s = d.support();
             return std::make_pair(s.lo, s.hi);
           })
      .def("__repr__", &Distribution::describe);

  py::class_<LejaSequence>(m, "LejaSequence")
      .def_static("weighted",
                  [](const Distribution& d, py::object y0) {
                    if (y0.is_none()) return LejaSequence::weighted(d);
                    return LejaSequence::weighted(d, y0.cast<double>());
                  },
                  py::arg("dist"), py::arg("y0") = py::none())
      .def_static("unweighted", &LejaSequence::unweighted, py::arg("y0") = 1.0)
      .def_static("symmetric", &LejaSequence::symmetric)
      .def("extend_to", &LejaSequence::extend_to)
      .def("nodes",
           [](LejaSequence& s, std::size_t count) {
             s.extend_to(count);
             return std::vector<double>(s.nodes().begin(),
                                        s.nodes().begin() + count);
           },
           py::arg("count"))
      .def_property_readonly("kind",
                             [](const LejaSequence& s) { return kind_str(s.kind()); });

  m.def("leja_nodes",
        [](const Distribution& d, std::size_t count, py::object y0) {
          LejaSequence s = y0.is_none() ? LejaSequence::weighted(d)
                                        : LejaSequence::weighted(d, y0.cast<double>());
          s.extend_to(count);
          return std::vector<double>(s.nodes().begin(), s.nodes().begin() + count);
        },
        py::arg("dist"), py::arg("count"), py::arg("y0") = py::none(),
        "Weighted Leja nodes for a distribution");

  py::class_<BuildReport>(m, "BuildReport")
      .def_readonly("iterations", &BuildReport::iterations)
      .def_readonly("final_eta_tot", &BuildReport::final_eta_tot)
      .def_property_readonly("reason", [](const BuildReport& r) {
        return r.reason == Termination::budget ? "budget" : "tolerance";
      });

  py::class_<SparseSurrogate>(m, "Surrogate")
      .def("__call__",
           [](const SparseSurrogate& s, const std::vector<double>& y) {
             return s.eval(y);
           })
      .def("eval",
           [](const SparseSurrogate& s, const std::vector<double>& y) {
             return s.eval(y);
           })
      .def("mean", [](const SparseSurrogate& s) { return mean_direct(s).value; })
      .def_property_readonly("dimension", &SparseSurrogate::dimension)
      .def_property_readonly("eval_count", &SparseSurrogate::eval_count)
      .def_property_readonly("indices",
                             [](const SparseSurrogate& s) {
                               return s.accepted().members();
                             })
      .def_property_readonly("surpluses",
                             [](const SparseSurrogate& s) {
                               return std::vector<double>(s.surpluses().begin(),
                                                          s.surpluses().end());
                             })
      .def("save", &SparseSurrogate::save, py::arg("path"))
      .def_static("load", &SparseSurrogate::load, py::arg("path"));

  m.def("adaptive_build",
        [](const py::function& model, const std::vector<Distribution>& dists,
           std::uint64_t budget, double tolerance) {
          return adaptive_build(wrap_model(model), dists, budget, tolerance);
        },
        py::arg("model"), py::arg("dists"), py::arg("budget"),
        py::arg("tolerance") = 0.0,
        "Dimension-adaptive build; returns (Surrogate, BuildReport)");

  m.def("rms_cv_error",
        [](const SparseSurrogate& s, const py::function& model,
           const std::vector<std::vector<double>>& sample) {
          return rms_cv_error(
              [&s](std::span<const double> y) { return s.eval(y); },
              wrap_model(model), sample);
        },
        py::arg("surrogate"), py::arg("model"), py::arg("sample"));

  py::class_<BenchmarkModel>(m, "BenchmarkModel")
      .def_readonly("name", &BenchmarkModel::name)
      .def_readonly("dimension", &BenchmarkModel::dimension)
      .def_readonly("dists", &BenchmarkModel::dists)
      .def("__call__", [](const BenchmarkModel& b, const std::vector<double>& y) {
        return b.evaluator(y);
      });

  m.def("benchmark", &benchmark_spec, py::arg("name"),
        "Built-in models: borehole, steel-column, meromorphic");
  m.def("borehole_eval",
        [](const std::vector<double>& y) { return borehole_eval(y); });
  m.def("steel_column_eval",
        [](const std::vector<double>& y) { return steel_column_eval(y); });
  m.def("meromorphic_eval",
        [](const std::vector<double>& y) { return meromorphic_eval(y); });

  m.def("sobol_points", &sobol_points, py::arg("dimension"), py::arg("count"),
        py::arg("skip") = 1);

  m.def("mc_reference_mean",
        [](const py::function& model, const std::vector<Distribution>& dists,
           std::uint64_t count, const std::string& method, std::uint64_t seed) {
          PointStream stream = method == "sobol"
                                   ? PointStream::sobol(dists.size())
                                   : PointStream::pseudo_random(dists.size(), seed);
          const McEstimate est =
              mc_reference_mean(wrap_model(model), dists, count, stream);
          return std::make_pair(est.mean, est.standard_error);
        },
        py::arg("model"), py::arg("dists"), py::arg("count"),
        py::arg("method") = "sobol", py::arg("seed") = 0,
        "Returns (mean, standard_error)");
}
