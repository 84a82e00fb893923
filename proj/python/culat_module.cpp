#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "culat/biclosed.hpp"
#include "culat/canonical.hpp"
#include "culat/congruence.hpp"
#include "culat/core_label.hpp"
#include "culat/doubling.hpp"
#include "culat/enumeration.hpp"
#include "culat/fixtures.hpp"
#include "culat/io.hpp"

namespace py = pybind11;
using namespace culat;

namespace {

std::vector<int> members(BitSet s) { return {s.begin(), s.end()}; }

Lattice lattice_of(int n, const std::vector<Relation>& covers) { return lattice_from_covers(n, covers); }

py::dict counts_row(const CountsRow& r) {
  py::dict d;
  d["n"] = r.n;
  d["l"] = r.l;
  d["c"] = r.c;
  d["s"] = r.s;
  d["S"] = r.S;
  return d;
}

}  // namespace

PYBIND11_MODULE(_culat, m) {
  m.doc() = "Finite lattices: congruences, doubling, core label orders, enumeration";

  py::register_exception<NotALatticeError>(m, "NotALatticeError", PyExc_ValueError);
  py::register_exception<NotCongruenceUniform>(m, "NotCongruenceUniform", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Lattice>(m, "Lattice")
      .def(py::init(&lattice_of), py::arg("n"), py::arg("covers"),
           "Lattice on 0..n-1 generated by the given relations; raises NotALatticeError.")
      .def("__len__", &Lattice::size)
      .def_property_readonly("size", &Lattice::size)
      .def_property_readonly("bottom", &Lattice::bottom)
      .def_property_readonly("top", &Lattice::top)
      .def("leq", &Lattice::leq)
      .def("meet", &Lattice::meet)
      .def("join", &Lattice::join)
      .def("covers", [](const Lattice& l) { return l.poset().cover_relations(); })
      .def("atoms", [](const Lattice& l) { return members(l.atoms()); })
      .def("join_irreducibles",
           [](const Lattice& l) {
             std::vector<int> out;
             for (const auto& j : l.join_irreducibles()) out.push_back(j.j);
             return out;
           })
      .def("mobius", [](const Lattice& l, int x, int y) { return l.poset().mobius(x, y); })
      .def("__repr__", [](const Lattice& l) { return "<culat.Lattice with " + std::to_string(l.size()) + " elements>"; });

  m.def(
      "parse",
      [](const std::string& text) {
        NamedPoset p = parse_poset(text);
        return py::make_tuple(make_lattice(p.poset), p.names);
      },
      py::arg("text"), "Parse the text or JSON lattice format; returns (lattice, names).");
  m.def(
      "format",
      [](const Lattice& l, const std::vector<std::string>& names) { return format_poset(l.poset(), names); },
      py::arg("lattice"), py::arg("names") = std::vector<std::string>{});
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixture_catalog()) out.push_back(f.name);
    return out;
  });
  m.def(
      "fixture",
      [](const std::string& name) {
        NamedPoset p = fixture_poset(name);
        return py::make_tuple(make_lattice(p.poset), p.names);
      },
      py::arg("name"));

  m.def("boolean_lattice", &boolean_lattice, py::arg("rank"));
  m.def("chain_lattice", &chain_lattice, py::arg("size"));
  m.def("double_interval", [](const Lattice& l, int a, int b) { return double_interval(l, a, b); }, py::arg("lattice"),
        py::arg("lo"), py::arg("hi"));
  m.def("mobius", &mobius_bottom_top, py::arg("lattice"));
  m.def("is_semidistributive", &is_semidistributive);
  m.def("is_spherical", &is_spherical);
  m.def("is_congruence_uniform", &is_congruence_uniform);
  m.def(
      "canonical_join_representation",
      [](const Lattice& l, int x) -> std::optional<std::vector<int>> {
        auto r = canonical_join_representation(l, x);
        if (!r) return std::nullopt;
        return members(*r);
      },
      py::arg("lattice"), py::arg("x"));
  m.def("canonical_form", [](const Lattice& l) { return canonical_form(l.poset()).rows; });
  m.def("isomorphic", [](const Lattice& a, const Lattice& b) { return isomorphic(a.poset(), b.poset()); });

  m.def(
      "congruences", [](const Lattice& l) {
        std::vector<std::vector<int>> out;
        for (const auto& t : all_congruences(l)) out.push_back(t.class_indices());
        return out;
      },
      "Every congruence as a class-index list, finer congruences first.");
  m.def("cg", [](const Lattice& l, int u, int v) { return cg(l, u, v).class_indices(); }, py::arg("lattice"),
        py::arg("lower"), py::arg("upper"));
  m.def(
      "quotient",
      [](const Lattice& l, const std::vector<int>& class_of) {
        Congruence t(class_of);
        if (!is_congruence(l, t)) throw py::value_error("not a congruence");
        Quotient q = quotient(l, t);
        return py::make_tuple(q.lattice, q.projection);
      },
      py::arg("lattice"), py::arg("classes"));

  m.def(
      "core_label_sets",
      [](const Lattice& l) {
        auto clo = core_label_order(label_covers(l));
        std::vector<std::vector<int>> out;
        for (LabelSet s : clo.psi) {
          std::vector<int> elements;
          for (int i : s) elements.push_back(l.join_irreducibles()[i].j);
          out.push_back(elements);
        }
        return out;
      },
      "Core label set of every element, as join-irreducible elements.");
  m.def("core_label_order_is_lattice", [](const Lattice& l) { return is_clo_lattice(core_label_order(label_covers(l))); });
  m.def("has_intersection_property",
        [](const Lattice& l) { return has_intersection_property(core_label_order(label_covers(l))); });
  m.def("boolean_defect", [](const Lattice& l) { return boolean_defect(label_covers(l)); });

  m.def("generate_cu", py::overload_cast<int>(&generate_cu), py::arg("max_n"));
  m.def(
      "count_lattices", [](int n) { return enumerate_lattices(n).size(); }, py::arg("n"));
  m.def(
      "table1",
      [](int max_n, int threads, bool extended) {
        EnumerationOptions options;
        options.threads = threads;
        options.extended = extended;
        std::vector<CountsRow> rows;
        {
          py::gil_scoped_release release;
          rows = table1(max_n, options);
        }
        py::list out;
        for (const auto& r : rows) out.append(counts_row(r));
        return out;
      },
      py::arg("max_n"), py::arg("threads") = 1, py::arg("extended") = false);

  m.def(
      "biclosed_sets",
      [](const std::string& closure_text) {
        ClosureOperator op = parse_closure(closure_text);
        if (auto v = validate(op)) throw py::value_error(v->describe(op));
        std::vector<std::string> out;
        for (GroundSet s : biclosed_sets(op).sets) out.push_back(op.format_set(s));
        return out;
      },
      py::arg("closure_text"), "Biclosed sets of a closure operator given in the closure file format.");
  m.def(
      "search_biclosed",
      [](int m, bool single_step) {
        SearchFilters filters;
        filters.require_single_step = single_step;
        std::vector<Lattice> found;
        SearchReport report;
        {
          py::gil_scoped_release release;
          report = search_biclosed(m, filters, [&](const SearchCandidate& c) {
            if (c.biclosed) found.push_back(*c.biclosed);
          });
        }
        py::dict d;
        d["m"] = report.m;
        d["families"] = report.families;
        d["examined"] = report.examined;
        d["candidates"] = report.candidates;
        d["lattices"] = found;
        return d;
      },
      py::arg("m"), py::arg("single_step") = true);
}
