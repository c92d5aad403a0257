#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqhom/cli.hpp"
#include "eqhom/errors.hpp"
#include "eqhom/io.hpp"

namespace py = pybind11;
using namespace eqhom;

namespace {

std::vector<std::string> homology_strings(const ChainComplex& c) {
  std::vector<std::string> out;
  for (const auto& h : homology(c)) out.push_back(h.str(c.ring()));
  return out;
}

GSSet sset_from_text(const std::string& text, const Group& g) { return io::gsset_from_json(io::Json::parse(text), g).object; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite equivariant homotopy toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<Ring>(m, "Ring")
      .def_static("parse", &Ring::parse)
      .def_property_readonly("name", &Ring::name)
      .def("__repr__", [](const Ring& r) { return "Ring(" + r.name() + ")"; });

  py::class_<Group>(m, "Group")
      .def_static("trivial", &Group::trivial)
      .def_static("cyclic", &Group::cyclic)
      .def_static("dihedral", &Group::dihedral)
      .def_static("symmetric", &Group::symmetric)
      .def_static("from_table", &Group::from_table)
      .def_static("from_json", [](const std::string& text) { return io::group_from_json(io::Json::parse(text)); })
      .def_property_readonly("order", &Group::order)
      .def("mul", &Group::mul)
      .def("inv", &Group::inv)
      .def("__eq__", &Group::operator==);

  py::class_<Subgroup>(m, "Subgroup")
      .def(py::init<Group, std::vector<Element>>())
      .def_static("trivial", &Subgroup::trivial)
      .def_static("whole", &Subgroup::whole)
      .def_property_readonly("members", &Subgroup::members)
      .def("__len__", &Subgroup::size)
      .def("__str__", &Subgroup::str)
      .def("__eq__", &Subgroup::operator==);

  m.def("all_subgroups", [](const Group& g) { return all_subgroups(g); });
  m.def("are_conjugate", &are_conjugate);

  py::class_<OrbitCategory>(m, "OrbitCategory")
      .def(py::init<Group, std::vector<Subgroup>>())
      .def_property_readonly("family", &OrbitCategory::family)
      .def("hom", &OrbitCategory::hom)
      .def("table", &OrbitCategory::table)
      .def("census", [](const OrbitCategory& oc) { return arrow_poset_census(oc).diagram_count(); });

  py::class_<GSSet>(m, "GSSet")
      .def_static("standard_simplex", &GSSet::standard_simplex, py::arg("n"), py::arg("group") = Group::trivial())
      .def_static("boundary", &GSSet::boundary, py::arg("n"), py::arg("group") = Group::trivial())
      .def_static("from_json", &sset_from_text, py::arg("text"), py::arg("group") = Group::trivial())
      .def("__len__", &GSSet::size)
      .def_property_readonly("top_dim", &GSSet::top_dim)
      .def("count", &GSSet::count)
      .def("fixed", [](const GSSet& x, const Subgroup& h) { return fixed_sset(x, h).object; })
      .def("to_json", [](const GSSet& x) { return io::to_json(x).dump(); });

  m.def(
      "homology", [](const GSSet& x, const std::string& ring) { return homology_strings(normalized_chains(x, Ring::parse(ring)).complex()); },
      py::arg("x"), py::arg("ring") = "Z", "Homology groups of the normalized chains, one string per degree.");
  m.def(
      "invariant_homology",
      [](const GSSet& x, const Subgroup& h, const std::string& ring) {
        return homology_strings(invariants(normalized_chains(x, Ring::parse(ring)), h).complex);
      },
      py::arg("x"), py::arg("h"), py::arg("ring") = "Z");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"eqhom"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs one command; returns (status, stdout, stderr).");
}
