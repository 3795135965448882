// Python bindings. Everything crosses the boundary as JSON text so rationals
// stay exact; python/gorbit/__init__.py turns "p/q" strings into Fractions.

#include "gorbit/divisor.hpp"
#include "gorbit/family.hpp"
#include "gorbit/io.hpp"
#include "gorbit/toric.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
using namespace gorbit;

namespace {

// A cone is either its 1-based number or a list of 1-based ray labels.
using ConeSpec = std::variant<std::size_t, std::vector<std::size_t>>;

class PyProblem {
 public:
  explicit PyProblem(const std::string& text) : p_(parse_problem(json::parse(text))) {}

  static PyProblem from_file(const std::string& path) { return PyProblem(load_json(path).dump()); }

  std::string info() const { return info_to_json(p_).dump(); }
  std::string canonical() const { return set_to_json(p_.group, canonical_family(p_.fan, p_.group)).dump(); }
  std::string maxshift() const { return set_to_json(p_.group, maximal_shift_family(p_.fan, p_.group)).dump(); }

  std::string per_ray_tables() const {
    json out = json::array();
    for (std::size_t i = 0; i < p_.fan.rays().size(); ++i)
      out.push_back(per_ray_to_json(p_.fan, p_.group, enumerate_per_ray(p_.fan, p_.group, i)));
    return out.dump();
  }

  std::string count() const { return NormalizedEnumeration(p_.fan, p_.group).count().str(); }

  std::vector<std::string> enumerate(std::optional<std::size_t> limit) const {
    std::vector<std::string> out;
    enumerate_normalized(p_.fan, p_.group, [&](const ReductorSet& s) {
      out.push_back(set_to_json(p_.group, s).dump());
      return true;
    }, limit);
    return out;
  }

  std::string check(const std::string& set_text) const {
    const ReductorSet set = read(set_text);
    const ReductorReport red = check_reductor(p_.fan, p_.group, set);
    json out{{"reductor", reductor_report_to_json(p_.fan, p_.group, red)}, {"passed", red.passed()}};
    if (red.passed()) {
      const BoundsReport b = bounds_check(p_.fan, p_.group, normalize(p_.group, set));
      out["bounds"] = bounds_report_to_json(p_.fan, p_.group, b);
      out["passed"] = b.passed();
    }
    return out.dump();
  }

  std::string piece(const ConeSpec& cone, const std::string& set_text) const {
    return piece_to_json(p_.fan, p_.group, reductor_piece(p_.fan, p_.group, read(set_text), resolve(cone))).dump();
  }

  std::string quiver_json(const ConeSpec& cone, const std::string& set_text) const {
    return quiver_to_json(p_.fan, p_.group, quiver(p_.fan, p_.group, read(set_text), resolve(cone))).dump();
  }

  std::string quiver_dot_text(const ConeSpec& cone, const std::string& set_text) const {
    return quiver_dot(p_.fan, p_.group, quiver(p_.fan, p_.group, read(set_text), resolve(cone)));
  }

  std::string cartier(const std::string& chi, const std::string& coeffs_text) const {
    const GWeilDivisor d(p_.group.parse_character(chi), coeffs_from_json(p_.fan, json::parse(coeffs_text)));
    return cartier_to_json(p_.fan, p_.group, weil_to_cartier(p_.fan, p_.group, d)).dump();
  }

  std::string shift(const std::string& lambda, const std::string& set_text) const {
    return set_to_json(p_.group, lambda_shift(p_.group, read(set_text), p_.group.parse_character(lambda))).dump();
  }

  std::string reflect_set(const std::string& set_text) const {
    return set_to_json(p_.group, reflect(p_.group, read(set_text))).dump();
  }

  std::string normalize_set(const std::string& set_text) const {
    return set_to_json(p_.group, normalize(p_.group, read(set_text))).dump();
  }

  std::string equiv(const std::string& a, const std::string& b) const {
    const auto w = equivalence_witness(p_.fan, p_.group, read(a), read(b));
    json out{{"equivalent", w.has_value()}};
    if (w) {
      out["shift"] = divisor_to_json(p_.group, w->shift);
      out["isomorphic"] = w->isomorphism.has_value();
      if (w->isomorphism) out["monomial"] = to_json(*w->isomorphism);
    }
    return out.dump();
  }

  std::string frac_val_of(std::size_t ray_label, const std::string& chi) const {
    if (ray_label < 1 || ray_label > p_.fan.rays().size()) throw InvalidInput("unknown ray label");
    return to_string(frac_val(p_.fan.ray(ray_label - 1), p_.group, p_.group.parse_character(chi)));
  }

 private:
  ReductorSet read(const std::string& text) const { return set_from_json(p_.fan, p_.group, json::parse(text)); }

  std::size_t resolve(const ConeSpec& cone) const {
    if (const auto* k = std::get_if<std::size_t>(&cone)) {
      if (*k < 1 || *k > p_.fan.cones().size()) throw InvalidInput("no cone numbered " + std::to_string(*k));
      return *k - 1;
    }
    std::vector<std::size_t> rays;
    for (auto label : std::get<std::vector<std::size_t>>(cone)) {
      if (label < 1) throw InvalidInput("ray labels are 1-based");
      rays.push_back(label - 1);
    }
    const auto k = p_.fan.find_cone(rays);
    if (!k) throw InvalidInput("no cone with those rays");
    return *k;
  }

  Problem p_;
};

}  // namespace

PYBIND11_MODULE(_gorbit, m) {
  m.doc() = "Deformations of the generic orbit on toric resolutions of C^n/G (JSON-level bindings)";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<CongruenceViolation>(m, "CongruenceViolation", base.ptr());
  py::register_exception<GluingViolation>(m, "GluingViolation", base.ptr());
  py::register_exception<NotBasic>(m, "NotBasic", base.ptr());
  py::register_exception<SingularMatrix>(m, "SingularMatrix", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyProblem>(m, "Problem")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def_static("from_file", &PyProblem::from_file, py::arg("path"))
      .def("info", &PyProblem::info)
      .def("canonical", &PyProblem::canonical)
      .def("maxshift", &PyProblem::maxshift)
      .def("per_ray_tables", &PyProblem::per_ray_tables)
      .def("count", &PyProblem::count)
      .def("enumerate", &PyProblem::enumerate, py::arg("limit") = py::none())
      .def("check", &PyProblem::check, py::arg("set"))
      .def("piece", &PyProblem::piece, py::arg("cone"), py::arg("set"))
      .def("quiver", &PyProblem::quiver_json, py::arg("cone"), py::arg("set"))
      .def("quiver_dot", &PyProblem::quiver_dot_text, py::arg("cone"), py::arg("set"))
      .def("cartier", &PyProblem::cartier, py::arg("char"), py::arg("coeffs"))
      .def("shift", &PyProblem::shift, py::arg("lam"), py::arg("set"))
      .def("reflect", &PyProblem::reflect_set, py::arg("set"))
      .def("normalize", &PyProblem::normalize_set, py::arg("set"))
      .def("equiv", &PyProblem::equiv, py::arg("first"), py::arg("second"))
      .def("frac_val", &PyProblem::frac_val_of, py::arg("ray"), py::arg("char"));
}
