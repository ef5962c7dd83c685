#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

#include "ordwalk/csequence.hpp"
#include "ordwalk/json_io.hpp"
#include "ordwalk/ladder.hpp"
#include "ordwalk/probe.hpp"
#include "ordwalk/space.hpp"
#include "ordwalk/walks.hpp"

namespace py = pybind11;
using namespace ordwalk;

namespace {

std::set<Ordinal> to_set(const std::vector<Ordinal>& xs) { return {xs.begin(), xs.end()}; }

Point to_point(const std::optional<Ordinal>& p) {
  if (p) return *p;
  return Apex{};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ordinals below epsilon_0, minimal walks, and ladder colorings.";

  auto base = py::register_exception<Error>(m, "OrdwalkError", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "OrdinalSyntaxError", base.ptr());
  py::register_exception<OverflowError>(m, "NaturalOverflowError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<CertificateViolation>(m, "CertificateViolation", base.ptr());

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init<>())
      .def(py::init([](Natural n) { return Ordinal::natural(n); }))
      .def(py::init([](const std::string& s) { return parse(s); }))
      .def_static("omega", &Ordinal::omega)
      .def("is_zero", &Ordinal::is_zero)
      .def("is_limit", &Ordinal::is_limit)
      .def("is_successor", &Ordinal::is_successor)
      .def("as_natural", &Ordinal::as_natural)
      .def("successor", [](const Ordinal& a) { return successor(a); })
      .def(py::self + py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(format(a))); })
      .def("__str__", [](const Ordinal& a) { return format(a); })
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + format(a) + "')"; });
  py::implicitly_convertible<py::int_, Ordinal>();
  py::implicitly_convertible<py::str, Ordinal>();

  m.def("parse", [](const std::string& s) { return parse(s); });
  m.def("format", &format);
  m.def("probe", [](const Ordinal& cap, std::size_t tier) { return enumerate_probe(cap, tier).members; },
        py::arg("cap"), py::arg("tier") = 2);

  m.def("fund_seq", &fund_seq, py::arg("limit"), py::arg("i"));
  m.def("min_above", &min_above, py::arg("beta"), py::arg("alpha"));
  m.def("c_members", &c_members, py::arg("alpha"), py::arg("below"),
        py::arg("limit") = Natural{1'000'000});

  py::class_<WalkTrace>(m, "WalkTrace")
      .def_readonly("alpha", &WalkTrace::alpha)
      .def_readonly("beta", &WalkTrace::beta)
      .def_readonly("points", &WalkTrace::points)
      .def_property_readonly("rho2", &WalkTrace::rho2)
      .def("to_json", [](const WalkTrace& t) { return to_json(t).dump(); });

  m.def("trace", &trace, py::arg("alpha"), py::arg("beta"),
        py::arg("step_guard") = kDefaultStepGuard);
  m.def("rho2", &rho2, py::arg("alpha"), py::arg("beta"),
        py::arg("step_guard") = kDefaultStepGuard);
  m.def("stabilizer", &stabilizer, py::arg("alpha"), py::arg("beta"),
        py::arg("step_guard") = kDefaultStepGuard);
  m.def(
      "coherence_delta",
      [](const Ordinal& beta, const Ordinal& gamma, std::size_t tier, std::size_t workers) {
        const auto r = coherence_delta(beta, gamma, enumerate_probe(beta, tier), workers);
        return std::pair{r.max_delta, r.argmax};
      },
      py::arg("beta"), py::arg("gamma"), py::arg("tier") = 2, py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "unbounded_witness",
      [](const Ordinal& a_cap, const Ordinal& b_cap, Natural n, std::size_t tier)
          -> std::optional<std::tuple<Ordinal, Ordinal, Natural>> {
        const auto w = unbounded_witness(enumerate_probe(a_cap, tier), enumerate_probe(b_cap, tier), n);
        if (!w) return std::nullopt;
        return std::tuple{w->alpha, w->beta, w->rho2};
      },
      py::arg("a_cap"), py::arg("b_cap"), py::arg("n"), py::arg("tier") = 2);

  m.def(
      "member",
      [](const std::optional<Ordinal>& point, const Ordinal& anchor, Natural level) {
        return member(to_point(point), BasicOpen(anchor, level));
      },
      py::arg("point"), py::arg("anchor"), py::arg("level"));
  m.def(
      "member_descriptor",
      [](const std::optional<Ordinal>& point, const std::vector<std::pair<Ordinal, Natural>>& entries) {
        NeighborhoodDescriptor d;
        for (const auto& [a, n] : entries) d.add(a, n);
        return member(to_point(point), d);
      },
      py::arg("point"), py::arg("entries"));
  m.def(
      "frechet_extract",
      [](const std::vector<Ordinal>& a, const Ordinal& alpha, Natural m) {
        return frechet_extract(to_set(a), alpha, m);
      },
      py::arg("set"), py::arg("alpha"), py::arg("m"));
  m.def(
      "alpha1_merge",
      [](const std::vector<std::vector<Ordinal>>& fams, const Ordinal& alpha) {
        std::vector<std::set<Ordinal>> sets;
        for (const auto& f : fams) sets.push_back(to_set(f));
        const auto merged = alpha1_merge(sets, alpha);
        return std::vector<Ordinal>(merged.begin(), merged.end());
      },
      py::arg("families"), py::arg("alpha"));
  m.def(
      "gdelta_separate",
      [](const std::vector<Ordinal>& b) {
        const Separation s = gdelta_separate(to_set(b));
        return std::pair{s.scheme.beta, s.certificate};
      },
      py::arg("set"));
  m.def(
      "convergence_report",
      [](const std::vector<Ordinal>& seq, const std::vector<Ordinal>& anchors) {
        return to_json(convergence_report(seq, anchors)).dump();
      },
      py::arg("sequence"), py::arg("anchors"));

  m.def("ladder", &ladder, py::arg("alpha"), py::arg("i"));
  m.def("enum_index", &enum_index, py::arg("alpha"), py::arg("xi"));
  m.def("pair", &pair);
  m.def("unpair", &unpair);

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<Ordinal>(), py::arg("gamma"))
      .def_property_readonly("gamma", &Coloring::gamma)
      .def("__call__", &Coloring::evaluate)
      .def("bound", &Coloring::bound)
      .def("stage_count", &Coloring::stage_count);
  m.def("fiber_report", &fiber_report, py::arg("coloring"), py::arg("alpha"), py::arg("prefix"),
        py::call_guard<py::gil_scoped_release>());
}
