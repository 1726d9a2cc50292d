#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crglab/hurwitz.hpp"
#include "crglab/report.hpp"

namespace py = pybind11;
using namespace crg;

namespace {

ll::CenteredPolynomial poly_from(int degree, const std::vector<std::complex<double>>& coeffs) {
  if (static_cast<int>(coeffs.size()) != degree - 1) throw std::invalid_argument("need degree - 1 coefficients");
  return ll::CenteredPolynomial(degree, coeffs);
}

std::vector<std::string> labels(const std::vector<ll::Perm>& ls) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(ll::perm_to_string(l));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact factorization counts in G(d, r, n) and a numerical LL-map lab";

  py::register_exception<UnsupportedGroup>(m, "UnsupportedGroup", PyExc_ValueError);
  py::register_exception<ll::NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<GroupContext>(m, "Group")
      .def(py::init([](int d, int r, int n, std::optional<std::string> cache) {
             std::optional<std::filesystem::path> dir;
             if (cache) dir = *cache;
             return load_context(d, r, n, dir);
           }),
           py::arg("d"), py::arg("r"), py::arg("n"), py::arg("cache") = py::none())
      .def_property_readonly("name", [](const GroupContext& c) { return c.group.descriptor().name(); })
      .def_property_readonly("order", [](const GroupContext& c) { return c.group.size(); })
      .def_property_readonly("rank", [](const GroupContext& c) { return c.group.rank(); })
      .def_property_readonly("degrees", [](const GroupContext& c) { return c.group.descriptor().degrees; })
      .def_property_readonly("coxeter_number", [](const GroupContext& c) { return c.group.descriptor().h; })
      .def_property_readonly("from_cache", [](const GroupContext& c) { return c.from_cache; })
      .def("red_count", [](const GroupContext& c) { return c.engine->count_reduced(c.engine->coxeter()); })
      .def("nc_size", [](const GroupContext& c) { return c.engine->nc().size(); })
      .def("orbit_names", [](const GroupContext& c) {
        std::vector<std::string> out;
        for (const auto& o : c.lattice->orbits()) out.push_back(o.name);
        return out;
      })
      .def("primitive_count", [](const GroupContext& c, int orbit) { return c.engine->primitive_count(orbit).count; })
      .def("char_poly", [](const GroupContext& c, int orbit) {
        return c.lattice->orbits().at(static_cast<std::size_t>(orbit)).char_poly.coeffs();
      })
      .def("hurwitz_red_orbit", [](const GroupContext& c) {
        return hurwitz_orbit(c.group, c.engine->enumerate_red().front()).size();
      })
      .def("verify_json", [](const GroupContext& c) { return report::group_verify(c).dump(); })
      .def("passports_json", [](const GroupContext& c) { return report::group_passports(c).dump(); })
      .def("flats_csv", [](const GroupContext& c) { return report::flats_csv(c); });

  m.def("critical_values", [](int degree, const std::vector<std::complex<double>>& coeffs) {
    std::vector<std::pair<std::complex<double>, int>> out;
    for (const auto& cv : ll::critical_values(poly_from(degree, coeffs))) out.emplace_back(cv.value, cv.multiplicity);
    return out;
  });
  m.def("rlbl", [](int degree, const std::vector<std::complex<double>>& coeffs) {
    return labels(ll::rlbl(poly_from(degree, coeffs)).labels);
  });
  m.def("coxeter_loop", [](int degree) { return ll::perm_to_string(ll::coxeter_loop(degree)); });
  m.def("random_generic", [](int degree, std::uint64_t seed) { return ll::random_generic(degree, seed).coeffs; },
        py::arg("degree"), py::arg("seed") = 0);
  m.def("fiber_json", [](int degree, std::uint64_t seed) { return report::ll_fiber(degree, seed).dump(); },
        py::arg("degree"), py::arg("seed") = 0);
  m.def("equivariance_json",
        [](int degree, int trials, std::uint64_t seed) { return report::ll_equivariance(degree, trials, seed).dump(); },
        py::arg("degree"), py::arg("trials") = 20, py::arg("seed") = 0);
  m.def("group_info_json", [](int d, int r, int n) { return report::group_info(ReflectionGroup::build(d, r, n)).dump(); });
}
