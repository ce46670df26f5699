#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polygroth/briangram.hpp"
#include "polygroth/dsl.hpp"
#include "polygroth/errors.hpp"
#include "polygroth/euler.hpp"
#include "polygroth/grothendieck.hpp"
#include "polygroth/motivic.hpp"
#include "polygroth/onedim.hpp"
#include "polygroth/verify/checks.hpp"

namespace py = pybind11;
using namespace polygroth;

namespace {

Limits limits_from(std::size_t max_hyperplanes, std::size_t max_dim) {
  Limits l;
  l.max_hyperplanes = max_hyperplanes;
  l.max_dim = max_dim;
  return l;
}

SubgroupQ gamma_from(const std::string& g) {
  return g == "div" ? SubgroupQ::divisible() : SubgroupQ::cyclic(parse_rational(g));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Grothendieck-ring invariants of rational polyhedra and constructible sets";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  py::class_<ConstructibleSet>(m, "ConstructibleSet")
      .def_property_readonly("dim", &ConstructibleSet::dim)
      .def("contains", [](const ConstructibleSet& C, const std::vector<std::string>& x) {
        QVec q;
        for (const auto& s : x) q.push_back(parse_rational(s));
        if (q.size() != C.dim()) throw UsageError("point has the wrong length");
        return C.contains(q);
      })
      .def("__and__", [](const ConstructibleSet& a, const ConstructibleSet& b) { return a & b; })
      .def("__or__", [](const ConstructibleSet& a, const ConstructibleSet& b) { return a | b; })
      .def("__invert__", [](const ConstructibleSet& a) { return !a; })
      .def("__sub__", [](const ConstructibleSet& a, const ConstructibleSet& b) { return difference(a, b); })
      .def("__str__", &render_constructible);

  py::class_<HPolyhedron>(m, "Polyhedron")
      .def_property_readonly("dim", &HPolyhedron::dim)
      .def("__str__", &render_polyhedron);

  m.def("parse_set", [](const std::string& t) { return parse_constructible(t); });
  m.def("parse_polyhedron", [](const std::string& t) { return parse_polyhedron(t); });
  m.def("from_polyhedron", &ConstructibleSet::from_polyhedron);
  m.def("product", py::overload_cast<const ConstructibleSet&, const ConstructibleSet&>(&product));
  m.def("sets_equal", [](const ConstructibleSet& a, const ConstructibleSet& b) { return sets_equal(a, b); });

  m.def("euler_pair", [](const ConstructibleSet& C, std::size_t mh, std::size_t md) {
        const EulerPair e = euler_pair(C, limits_from(mh, md));
        return py::make_tuple(e.chi, e.chi_b);
      }, py::arg("set"), py::arg("max_hyperplanes") = 14, py::arg("max_dim") = 6);
  m.def("class_text", [](const ConstructibleSet& C) { return class_of(C).render(); });
  m.def("ungraded", [](const ConstructibleSet& C) {
    const UngradedClass u = ungraded(class_of(C));
    return py::make_tuple(u.chi, u.chi_b);
  });
  m.def("chi_gamma", [](const ConstructibleSet& C, const std::string& g) { return chi_gamma(C, gamma_from(g)); },
        py::arg("set"), py::arg("gamma") = "div");

  m.def("face_count", [](const HPolyhedron& P) { return faces(P).size(); });
  m.def("lineality", [](const HPolyhedron& P) { return recession(P).ell; });
  m.def("bg_verify", [](const HPolyhedron& P) { return bg_verify(P); });
  m.def("bg_terms", [](const HPolyhedron& P) {
    py::list out;
    for (const auto& t : bg_decompose(P).terms) out.append(py::make_tuple(t.sign, t.face.dim, render_polyhedron(t.cone)));
    return out;
  });

  m.def("motivic", [](const std::string& text) {
    const VFClass x = semialg_class(parse_semialg(text));
    return py::make_tuple(x.f().coeffs(), x.g().coeffs(), in_kernel_psi(x));
  });

  m.def("run_checks", [](const std::string& pattern) {
    py::list out;
    for (const auto& r : verify::run_checks(pattern)) out.append(py::make_tuple(r.name, r.criterion, r.passed, r.detail));
    return out;
  }, py::arg("pattern") = "*");
}
