#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ncontact/analysis.hpp"
#include "ncontact/contact.hpp"
#include "ncontact/error.hpp"
#include "ncontact/parse.hpp"
#include "ncontact/projective.hpp"
#include "ncontact/reproduce.hpp"
#include "ncontact/session.hpp"

namespace py = pybind11;
using namespace ncontact;

namespace {

EllipticCurve curve_from_equation(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) return EllipticCurve::from_poly(parse_unipoly(text));
  if (parse_bipoly(text.substr(0, eq)) != parse_bipoly("y^2")) throw SyntaxError("expected 'y^2 = f(x)'", 0);
  return EllipticCurve::from_poly(parse_unipoly(text.substr(eq + 1)));
}

EPoint point_on(const EllipticCurve& e, const std::string& x, const std::string& y) {
  return EPoint::affine(e, parse_rational(x), parse_rational(y));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact n-contact curve construction on rational elliptic curves";

  py::register_exception<Error>(m, "Error");

  py::class_<Report>(m, "Report")
      .def_property_readonly("title", &Report::title)
      .def_property_readonly("entries", &Report::entries)
      .def_property_readonly("passed", &Report::passed)
      .def_property_readonly("failed_checks", &Report::failed_checks)
      .def("get", &Report::get, py::arg("key"))
      .def("text", &Report::render_text)
      .def("machine", &Report::render_machine)
      .def("__repr__", [](const Report& r) { return "<Report " + r.title() + (r.passed() ? " pass>" : " fail>"); });

  py::class_<EllipticCurve>(m, "Curve")
      .def(py::init(&curve_from_equation), py::arg("equation"))
      .def_property_readonly("f", [](const EllipticCurve& e) { return e.f().to_string(); })
      .def_property_readonly("discriminant", [](const EllipticCurve& e) { return to_string(e.discriminant()); })
      .def("contains", [](const EllipticCurve& e, const std::string& x, const std::string& y) {
        return e.contains(parse_rational(x), parse_rational(y));
      })
      .def("__eq__", [](const EllipticCurve& a, const EllipticCurve& b) { return a == b; })
      .def("__str__", &EllipticCurve::to_string)
      .def("__repr__", [](const EllipticCurve& e) { return "<Curve " + e.to_string() + ">"; });

  py::class_<EPoint>(m, "Point")
      .def(py::init(&point_on), py::arg("curve"), py::arg("x"), py::arg("y"))
      .def_static("infinity", &EPoint::infinity, py::arg("curve"))
      .def_property_readonly("is_infinity", &EPoint::is_infinity)
      .def_property_readonly("x", [](const EPoint& p) { return to_string(p.x()); })
      .def_property_readonly("y", [](const EPoint& p) { return to_string(p.y()); })
      .def_property_readonly("curve", &EPoint::curve)
      .def("__add__", [](const EPoint& p, const EPoint& q) { return add(p, q); })
      .def("__neg__", [](const EPoint& p) { return neg(p); })
      .def("__rmul__", [](const EPoint& p, long k) { return scalar_mul(k, p); })
      .def("__mul__", [](const EPoint& p, long k) { return scalar_mul(k, p); })
      .def("__eq__", [](const EPoint& p, const EPoint& q) { return p == q; })
      .def("__str__", &EPoint::to_string)
      .def("__repr__", [](const EPoint& p) { return "<Point " + p.to_string() + ">"; });

  m.def("order", [](const EPoint& p, int bound) { return order_of(p, bound); }, py::arg("point"),
        py::arg("bound") = 24);

  m.def("xi", [](const EPoint& t, int n) { return to_string(build_xi(t.curve(), t, n).to_poly()); }, py::arg("T"),
        py::arg("n"));

  m.def(
      "contact",
      [](const std::string& b, const EPoint& t, int n, std::optional<std::string> smooth_fix) {
        const ContactResult res = run_contact(FunctionRep::from_poly(parse_bipoly(b), t.curve()), t, n);
        py::dict out;
        out["b_nd"] = to_string(res.b_nd.to_poly());
        out["h_nd"] = to_string(res.h_nd);
        out["n"] = res.n;
        out["d"] = res.d;
        out["report"] = res.report;
        if (smooth_fix) {
          std::optional<SmoothingChoice> choice;
          if (*smooth_fix == "auto")
            choice = auto_smoothing_fix(res.h_nd, t.curve());
          else {
            const BiPoly q = parse_bipoly(*smooth_fix);
            choice = SmoothingChoice{q, smoothing_fix(res.h_nd, t.curve(), q)};
          }
          if (choice) {
            out["q"] = to_string(choice->q);
            out["h_tilde"] = to_string(choice->h_smooth);
          }
        }
        return out;
      },
      py::arg("b"), py::arg("T"), py::arg("n"), py::arg("smooth_fix") = py::none());

  m.def(
      "is_smooth",
      [](const std::string& form) { return is_smooth_projective(parse_ternary(form)).smooth; }, py::arg("form"));

  m.def(
      "zariski",
      [](int n, const std::vector<int>& orders) {
        std::vector<std::pair<std::string, int>> configs;
        for (std::size_t i = 0; i < orders.size(); ++i) configs.emplace_back("D" + std::to_string(i + 1), orders[i]);
        return zariski_verdict(n, configs).to_report();
      },
      py::arg("n"), py::arg("orders"));

  m.def("reproduce", &reproduce, py::arg("section"));
  m.def("sections", &reproducible_sections);

  m.def(
      "run_session",
      [](const std::string& text) {
        ExecutionResult r = execute(parse_session(text));
        return py::make_tuple(r.reports, r.exit_code);
      },
      py::arg("text"));
}
