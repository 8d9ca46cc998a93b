#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynorb/canonical_height.hpp"
#include "dynorb/error.hpp"
#include "dynorb/expression.hpp"
#include "dynorb/families.hpp"
#include "dynorb/function_field.hpp"
#include "dynorb/orbit.hpp"
#include "dynorb/report.hpp"
#include "dynorb/verify.hpp"

namespace py = pybind11;
using namespace dynorb;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string orbit(const std::string& map, const std::string& point, const std::string& s, unsigned ncap,
                  std::size_t budget) {
  const auto m = to_map(parse_map_or_preset(map));
  return orbit_json(format_map(m), scan_orbit(m, parse_point(point), SIntSpec::parse(s), {ncap, budget})).dump();
}

py::tuple canheight(const std::string& map, const std::string& point, double tol) {
  const auto e = canonical_height(to_map(parse_map_or_preset(map)), parse_point(point), tol);
  return py::make_tuple(e.value, e.radius, e.iterations_used);
}

bool preper(const std::string& map, const std::string& point) {
  return is_preperiodic(to_map(parse_map_or_preset(map)), parse_point(point));
}

std::string density(const std::string& map, const std::string& s, const std::vector<long>& bs, unsigned workers) {
  return to_json(density_table(
                     density_of_integral_preimages(to_map(parse_map_or_preset(map)), SIntSpec::parse(s), bs, workers)))
      .dump();
}

std::string avg(const std::string& family, const std::string& beta, const std::string& s,
                const std::vector<long>& bs, unsigned ncap, unsigned workers) {
  OrbitPolicy pol;
  pol.n_cap = ncap;
  return to_json(avg_table(avg_experiment(parse_map_or_preset(family), parse_basepoint(beta), SIntSpec::parse(s),
                                          bs, pol, workers)))
      .dump();
}

std::string ffavg(int p, int d, const std::string& beta, const std::vector<long>& bs, unsigned workers) {
  const RationalExpr e = parse_expression(beta);
  if (!e.den.is_constant() || e.den.constant_value() != 1)
    throw Error(ErrorKind::InvalidInput, "beta must be a polynomial in f");
  return to_json(avg_table(ff_orbit_avg(p, d, e.num, {}, bs, {}, workers))).dump();
}

std::string verify(std::uint64_t seed, unsigned workers) {
  return to_json(verification_table(run_verify({seed, workers}))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error_type(m, "DynorbError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("orbit", &orbit, py::arg("map"), py::arg("point"), py::arg("s") = "", py::arg("ncap") = 16,
        py::arg("budget") = 1'000'000);
  m.def("canheight", &canheight, py::arg("map"), py::arg("point"), py::arg("tol") = 1e-9);
  m.def("preper", &preper, py::arg("map"), py::arg("point"));
  m.def("density", &density, py::arg("map"), py::arg("s"), py::arg("b"), py::arg("workers") = 1);
  m.def("avg", &avg, py::arg("family"), py::arg("beta"), py::arg("s"), py::arg("b"), py::arg("ncap") = 16,
        py::arg("workers") = 1);
  m.def("ffavg", &ffavg, py::arg("p"), py::arg("d"), py::arg("beta"), py::arg("b"), py::arg("workers") = 1);
  m.def("verify", &verify, py::arg("seed") = 1, py::arg("workers") = 1);
  m.def("format_map", [](const std::string& map) { return format_map(to_map(parse_map_or_preset(map))); });
}
