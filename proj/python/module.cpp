#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dyckbij/analytics.hpp"
#include "dyckbij/bijection.hpp"
#include "dyckbij/composition.hpp"
#include "dyckbij/errors.hpp"
#include "dyckbij/lco.hpp"
#include "dyckbij/orbit.hpp"
#include "dyckbij/path.hpp"
#include "dyckbij/series.hpp"

namespace py = pybind11;

namespace {

using dyckbij::DyckPath;
using dyckbij::Int;

py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

std::vector<std::string> texts(const std::vector<DyckPath>& paths) {
  std::vector<std::string> out;
  out.reserve(paths.size());
  for (const DyckPath& p : paths) out.push_back(p.text());
  return out;
}

}  // namespace

PYBIND11_MODULE(dyckbij, m) {
  m.doc() = "Dyck path bijection toolkit";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dyckbij::error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "forward", [](const std::string& p) { return dyckbij::forward(DyckPath::parse(p)).text(); },
      py::arg("path"), "Image of a path under the bijection.");
  m.def(
      "inverse", [](const std::string& p) { return dyckbij::inverse(DyckPath::parse(p)).text(); },
      py::arg("path"), "Preimage of a path under the bijection.");
  m.def(
      "forward_iter",
      [](const std::string& p, long k) { return dyckbij::forward_iter(DyckPath::parse(p), k).text(); },
      py::arg("path"), py::arg("k"), "Forward direction iterated k times.");
  m.def(
      "inverse_iter",
      [](const std::string& p, long k) { return dyckbij::inverse_iter(DyckPath::parse(p), k).text(); },
      py::arg("path"), py::arg("k"), "Inverse direction iterated k times.");
  m.def(
      "orbit", [](const std::string& p) { return texts(dyckbij::orbit_of(DyckPath::parse(p))); },
      py::arg("path"), "Cycle of a path under the map, starting at the path itself.");
  m.def(
      "is_primitive", [](const std::string& p) { return dyckbij::is_primitive(DyckPath::parse(p)); },
      py::arg("path"));
  m.def(
      "components",
      [](const std::string& p) { return texts(dyckbij::components(DyckPath::parse(p))); },
      py::arg("path"), "Primitive factors, in path order.");
  m.def(
      "count_pattern",
      [](const std::string& p, const std::string& pattern) {
        return dyckbij::count_pattern(DyckPath::parse(p), pattern);
      },
      py::arg("path"), py::arg("pattern"),
      "Occurrences of a step pattern; one '+' matches any nonempty balanced factor.");
  m.def(
      "enumerate_paths",
      [](int n, int cap) { return texts(dyckbij::enumerate_paths(n, cap)); }, py::arg("n"),
      py::arg("cap") = dyckbij::kDefaultEnumerationCap, "All paths of size n, lexicographic.");
  m.def(
      "fixed_points", [](int n, int cap) { return texts(dyckbij::fixed_points(n, cap)); },
      py::arg("n"), py::arg("cap") = dyckbij::kDefaultEnumerationCap,
      "Paths of size n fixed by the map.");
  m.def(
      "orbit_length_histogram",
      [](int n, int cap) { return dyckbij::orbit_length_histogram(n, cap); }, py::arg("n"),
      py::arg("cap") = dyckbij::kDefaultEnumerationCap,
      "Orbit length -> number of size-n paths in orbits of that length.");
  m.def(
      "orbit_exponent",
      [](const std::string& p) {
        return dyckbij::predict_orbit_exponent(dyckbij::path_to_forest(DyckPath::parse(p)));
      },
      py::arg("path"), "log2 of the orbit length, read off the forest shape.");

  m.def(
      "comp_forward", [](const dyckbij::Composition& c) { return dyckbij::forward(c); },
      py::arg("composition"), "The bijection in composition form.");
  m.def(
      "comp_forward_scan", [](const dyckbij::Composition& c) { return dyckbij::forward_scan(c); },
      py::arg("composition"), "Independent positional implementation; agrees with comp_forward.");
  m.def(
      "composition_to_path",
      [](const dyckbij::Composition& c) { return dyckbij::composition_to_path(c).text(); },
      py::arg("composition"));
  m.def(
      "path_to_composition",
      [](const std::string& p) { return dyckbij::path_to_composition(DyckPath::parse(p)); },
      py::arg("path"), "Codec for primitive DUU-avoiding paths.");
  m.def(
      "all_cn", [](int n, int cap) { return dyckbij::all_cn(n, cap); }, py::arg("n"),
      py::arg("cap") = dyckbij::kDefaultEnumerationCap,
      "Compositions of n ending in 1, lexicographic.");
  m.def(
      "cn_orbits", [](int n, int cap) { return dyckbij::cn_orbit_partition(n, cap); }, py::arg("n"),
      py::arg("cap") = dyckbij::kDefaultEnumerationCap,
      "Orbits of the end-in-1 compositions of n.");

  m.def(
      "forest_encode",
      [](const std::string& p) {
        return dyckbij::forest_to_json(dyckbij::path_to_forest(DyckPath::parse(p)));
      },
      py::arg("path"), "Canonical forest JSON for a path.");
  m.def(
      "forest_decode",
      [](const std::string& text) {
        return dyckbij::forest_to_path(dyckbij::forest_from_json(text)).text();
      },
      py::arg("json"), "Path encoded by a forest JSON document.");
  m.def(
      "forest_forward",
      [](const std::string& text) {
        return dyckbij::forest_to_json(dyckbij::forward(dyckbij::forest_from_json(text)));
      },
      py::arg("json"), "The bijection transported to forest JSON.");

  m.def("catalan", [](int n) { return to_py(dyckbij::catalan(n)); }, py::arg("n"));
  m.def("motzkin", [](int n) { return to_py(dyckbij::motzkin(n)); }, py::arg("n"));
  m.def(
      "gen_catalan", [](int j, int n) { return to_py(dyckbij::gen_catalan(j, n)); }, py::arg("j"),
      py::arg("n"), "j-fold Catalan convolution.");
  m.def(
      "fk_coefficients",
      [](int k, int order) {
        std::vector<py::int_> out;
        for (const Int& v : dyckbij::integer_coefficients(dyckbij::series_fk(k, order))) {
          out.push_back(to_py(v));
        }
        return out;
      },
      py::arg("k"), py::arg("order"),
      "Counts of paths in orbits of length <= 2^k, by size, from the series.");
  m.def(
      "leaf_table",
      [](int max_n) {
        std::vector<std::vector<py::int_>> out;
        for (const auto& row : dyckbij::lco_leaf_table(max_n)) {
          std::vector<py::int_> line;
          for (const Int& v : row) line.push_back(to_py(v));
          out.push_back(std::move(line));
        }
        return out;
      },
      py::arg("max_n"), "Forest leaf-count table rows 1..max_n.");
  m.def(
      "stat_x", [](const std::string& p) { return dyckbij::stat_x(DyckPath::parse(p)); },
      py::arg("path"), "DUD count; carried by the map to stat_y.");
  m.def(
      "stat_y", [](const std::string& p) { return dyckbij::stat_y(DyckPath::parse(p)); },
      py::arg("path"));
}
