#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bf/commands.hpp"
#include "bf/config.hpp"
#include "bf/report.hpp"

namespace py = pybind11;
using namespace bf;

namespace {

// reports cross the boundary as JSON text and come back as plain dicts
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

GroupPtr group_of(const std::string& g) { return load_group(g); }

}  // namespace

PYBIND11_MODULE(bfill, m) {
  m.doc() = "exact group-ring, homology and obstruction computations";
  m.attr("__version__") = tool_version();

  // the module attribute keeps the type alive
  static PyObject* exc = py::exception<Error>(m, "BfError", PyExc_RuntimeError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(exc)(e.what());
      inst.attr("code") = errc_name(e.code());
      inst.attr("exit_code") = exit_code(e);
      PyErr_SetObject(exc, inst.ptr());
    }
  });

  m.def(
      "homology",
      [](const std::string& group, int deg, const std::string& coeff, const std::string& w1, int depth,
         const std::string& strategy) {
        return to_py(cmd_homology(HomologyArgs{group, coeff, deg, depth, w1, strategy}));
      },
      py::arg("group"), py::arg("deg"), py::arg("coeff") = "z", py::arg("w1") = "", py::arg("depth") = -1,
      py::arg("strategy") = "auto");
  m.def("e2", [](const std::string& xi) { return to_py(cmd_e2(xi)); }, py::arg("xi"));
  m.def(
      "d2", [](const std::string& xi, int row, const std::string& line) { return to_py(cmd_d2(xi, row, line)); },
      py::arg("xi"), py::arg("row"), py::arg("line") = "q1");
  m.def(
      "filtration",
      [](const std::string& xi, const std::string& d3_image, const std::string& registry, bool assume) {
        return to_py(cmd_filtration(FiltrationArgs{xi, d3_image, registry, assume}));
      },
      py::arg("xi"), py::arg("d3_image") = "", py::arg("registry") = "", py::arg("assume_d3_30_zero") = false);
  m.def(
      "obstruct",
      [](const std::string& xi, const std::string& y, const std::string& filling, const std::string& registry,
         const std::string& stage) { return to_py(cmd_obstruct(ObstructArgs{xi, y, filling, registry, stage})); },
      py::arg("xi"), py::arg("y"), py::arg("filling") = "", py::arg("registry") = "", py::arg("stage") = "");

  // group-ring arithmetic on string forms
  m.def(
      "ring_mul",
      [](const std::string& g, const std::string& a, const std::string& b) {
        auto G = group_of(g);
        return (RingElem::parse(G, a) * RingElem::parse(G, b)).str();
      },
      py::arg("group"), py::arg("a"), py::arg("b"));
  m.def(
      "involute",
      [](const std::string& g, const std::string& x, const std::string& w1) {
        auto G = group_of(g);
        return involute(RingElem::parse(G, x), parse_character(G, w1)).str();
      },
      py::arg("group"), py::arg("x"), py::arg("w1") = "");
  m.def(
      "is_in_IJ", [](const std::string& g, const std::string& x) { return is_in_IJ(RingElem::parse(group_of(g), x)); },
      py::arg("group"), py::arg("x"));
  m.def(
      "h1_class",
      [](const std::string& g, const std::string& x) {
        auto G = group_of(g);
        return format_h1(*G, h1_class(RingElem::parse(G, x)));
      },
      py::arg("group"), py::arg("x"));
  m.def("spec_hash", [](const py::object& spec) { return spec_hash(from_py(spec)); }, py::arg("spec"));
}
