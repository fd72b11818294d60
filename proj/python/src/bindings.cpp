#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mhc/cdi.hpp"
#include "mhc/dataset.hpp"
#include "mhc/hierarchy.hpp"
#include "mhc/metrics.hpp"

namespace py = pybind11;
using namespace mhc;

namespace {

NnBackend parse_backend(const std::string& name) {
  if (name == "tree") return NnBackend::Tree;
  if (name == "exact") return NnBackend::Exact;
  throw ValidationError("backend must be 'tree' or 'exact', got '" + name + "'");
}

py::array_t<double> distance_array(const DistanceMatrix& d) {
  const auto n = static_cast<py::ssize_t>(d.order());
  py::array_t<double> out({n, n});
  std::copy(d.values().begin(), d.values().end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_mhc, m) {
  m.doc() = "Multi-view hierarchical clustering by cosine distance integration";
  m.attr("__version__") = kVersion;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<MultiViewDataset>(m, "Dataset")
      .def(py::init<std::vector<Matrix>, std::optional<LabelVector>>(), py::arg("views"),
           py::arg("labels") = std::nullopt)
      .def_property_readonly("num_samples", &MultiViewDataset::num_samples)
      .def_property_readonly("num_views", &MultiViewDataset::num_views)
      .def_property_readonly("views", &MultiViewDataset::views)
      .def_property_readonly("labels", &MultiViewDataset::labels);

  py::class_<LinkStats>(m, "LinkStats")
      .def_readonly("min", &LinkStats::min)
      .def_readonly("mean", &LinkStats::mean)
      .def_readonly("max", &LinkStats::max);

  py::class_<Hierarchy>(m, "Hierarchy")
      .def_property_readonly("num_samples", &Hierarchy::num_samples)
      .def_property_readonly("level_sizes", &Hierarchy::level_sizes)
      .def("assignment", [](const Hierarchy& h, std::size_t i) { return h.level(i).partition.assignment(); },
           py::arg("level"))
      .def("links", [](const Hierarchy& h, std::size_t i) { return h.level(i).links; }, py::arg("level"))
      .def("__len__", [](const Hierarchy& h) { return h.levels().size(); });

  m.def(
      "fit", [](const MultiViewDataset& ds, const std::string& backend) { return fit(ds, parse_backend(backend)); },
      py::arg("dataset"), py::arg("backend") = "tree", py::call_guard<py::gil_scoped_release>());
  m.def(
      "cut", [](const Hierarchy& h, const MultiViewDataset& ds, std::size_t k) { return cut(h, ds, k).assignment(); },
      py::arg("hierarchy"), py::arg("dataset"), py::arg("k"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "refine_to_k",
      [](const MultiViewDataset& ds, const LabelVector& assignment, std::size_t k) {
        return refine_to_k(ds, Partition::canonical(assignment), k).assignment();
      },
      py::arg("dataset"), py::arg("assignment"), py::arg("k"));
  m.def(
      "distance_matrix", [](const MultiViewDataset& ds) { return distance_array(essential_distance_matrix(ds)); },
      py::arg("dataset"));

  m.def(
      "generate_synthetic",
      [](std::size_t n, std::size_t views, std::size_t clusters, std::vector<std::size_t> dims, double separation,
         double noise, std::uint64_t seed) {
        return generate_synthetic({n, views, clusters, std::move(dims), separation, noise, seed});
      },
      py::arg("n") = 300, py::arg("views") = 2, py::arg("clusters") = 3,
      py::arg("dims") = std::vector<std::size_t>{16, 24}, py::arg("separation") = 1.0, py::arg("noise") = 0.05,
      py::arg("seed") = 1);

  m.def("accuracy", [](const LabelVector& t, const LabelVector& p) { return accuracy(t, p); }, py::arg("truth"),
        py::arg("pred"));
  m.def("nmi", [](const LabelVector& t, const LabelVector& p) { return nmi(t, p); }, py::arg("truth"),
        py::arg("pred"));
  m.def("f_measure", [](const LabelVector& t, const LabelVector& p) { return f_measure(t, p); }, py::arg("truth"),
        py::arg("pred"));
}
