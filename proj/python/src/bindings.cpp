#include "relhom/scenario.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace relhom;

namespace {

py::object to_py(const Integer& v) { return py::module_::import("builtins").attr("int")(relhom::to_string(v)); }

Integer from_py(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }

std::vector<Integer> from_py_list(const py::iterable& xs) {
  std::vector<Integer> out;
  for (const auto& x : xs) out.push_back(from_py(x));
  return out;
}

py::list matrix_to_py(const IntMatrix& a) {
  py::list rows;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < a.cols(); ++c) row.append(to_py(a(r, c)));
    rows.append(row);
  }
  return rows;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict verdict_to_py(const Verdict& v) { return json_to_py(to_json(v)); }

py::dict report_to_py(const SuiteReport& r) {
  py::list failures, entries;
  for (const auto& f : r.failures) failures.append(json_to_py(to_json(f)));
  for (const auto& e : r.entries) entries.append(json_to_py(to_json(e)));
  py::dict d;
  d["suite_id"] = r.suite_id;
  d["instances_checked"] = r.instances_checked;
  d["passed"] = r.pass();
  d["failures"] = failures;
  d["entries"] = entries;
  return d;
}

}  // namespace

PYBIND11_MODULE(_relhom, m) {
  m.doc() = "Relative homological invariants of finitely generated modules over Z/n and Z";

  py::register_exception<Error>(m, "RelhomError", PyExc_ValueError);

  py::class_<RingSpec>(m, "Ring")
      .def_static("integers", &RingSpec::integers)
      .def_static("modular", [](const py::int_& n) { return RingSpec::modular(from_py(n)); })
      .def_property_readonly("modulus", [](const RingSpec& r) { return to_py(r.modulus()); })
      .def("is_integers", &RingSpec::is_integers)
      .def("__eq__", [](const RingSpec& a, const RingSpec& b) { return a == b; })
      .def("__str__", &RingSpec::to_string)
      .def("__repr__", [](const RingSpec& r) { return "Ring(" + r.to_string() + ")"; });

  py::class_<ModuleObject>(m, "Module")
      .def(py::init([](const RingSpec& ring, const py::iterable& orders, std::size_t rank) {
             return ModuleObject(ring, rank, from_py_list(orders));
           }),
           py::arg("ring"), py::arg("orders") = py::list(), py::arg("rank") = 0)
      .def_property_readonly("ring", &ModuleObject::ring)
      .def_property_readonly("free_rank", &ModuleObject::free_rank)
      .def_property_readonly("orders",
                             [](const ModuleObject& x) {
                               py::list out;
                               for (const auto& d : x.torsion_orders()) out.append(to_py(d));
                               return out;
                             })
      .def("multiplicities",
           [](const ModuleObject& x) {
             py::dict out;
             for (const auto& [t, n] : x.multiplicities()) out[to_py(t)] = n;
             return out;
           })
      .def("cardinality",
           [](const ModuleObject& x) -> py::object {
             auto c = x.cardinality();
             return c ? to_py(*c) : py::none();
           })
      .def("is_zero", &ModuleObject::is_zero)
      .def("__eq__", [](const ModuleObject& a, const ModuleObject& b) { return a == b; })
      .def("__str__", &ModuleObject::to_string)
      .def("__repr__", [](const ModuleObject& x) { return "Module(" + x.ring().to_string() + ", " + x.to_string() + ")"; });

  py::class_<Morphism>(m, "Morphism")
      .def(py::init([](const ModuleObject& dom, const ModuleObject& cod, const std::vector<std::vector<py::int_>>& rows) {
             IntMatrix a(cod.generator_count(), dom.generator_count());
             if (rows.size() != a.rows()) throw py::value_error("matrix row count does not match the codomain");
             for (std::size_t r = 0; r < rows.size(); ++r) {
               if (rows[r].size() != a.cols()) throw py::value_error("matrix column count does not match the domain");
               for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = from_py(rows[r][c]);
             }
             return Morphism(dom, cod, a);
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("matrix"))
      .def_property_readonly("domain", &Morphism::domain)
      .def_property_readonly("codomain", &Morphism::codomain)
      .def_property_readonly("matrix", [](const Morphism& f) { return matrix_to_py(f.matrix()); })
      .def("is_mono", [](const Morphism& f) { return is_mono(f); })
      .def("is_epi", [](const Morphism& f) { return is_epi(f); })
      .def("is_iso", [](const Morphism& f) { return is_iso(f); })
      .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
      .def("__repr__", [](const Morphism& f) {
        return "Morphism(" + f.domain().to_string() + " -> " + f.codomain().to_string() + ", " + f.matrix().to_string() + ")";
      });

  py::class_<PrecoverClass>(m, "PrecoverClass")
      .def_static("add_closure", &PrecoverClass::add_closure)
      .def_static("powers", &PrecoverClass::powers)
      .def_static("torsion_over_z", &PrecoverClass::torsion_over_z)
      .def_property_readonly("ring", &PrecoverClass::ring)
      .def("contains", [](const PrecoverClass& c, const ModuleObject& x) { return contains(c, x); })
      .def("__str__", &PrecoverClass::to_string)
      .def("__repr__", [](const PrecoverClass& c) { return "PrecoverClass(" + c.to_string() + ")"; });

  m.def("parse_ring", [](const std::string& s) { return parse_ring(s); });
  m.def("parse_module", [](const RingSpec& r, const std::string& s) { return parse_module(r, s); });
  m.def("parse_class", [](const RingSpec& r, const std::string& s) { return parse_class(r, s); });

  m.def("hom", [](const ModuleObject& a, const ModuleObject& b) { return hom_group(a, b).value().to_string(); },
        "Hom(A, B) as text");
  m.def("kernel", [](const Morphism& f) { return kernel(f).module; });
  m.def("build_cover", [](const PrecoverClass& c, const ModuleObject& x) { return build_cover(c, x).precover; });
  m.def("build_precover", [](const PrecoverClass& c, const ModuleObject& x) { return build_precover(c, x).precover; });
  m.def("is_precover", [](const PrecoverClass& c, const Morphism& f) { return is_precover(c, f); });
  m.def("verify_precover", [](const PrecoverClass& c, const Morphism& f) { return verify_precover(c, f).ok; });
  m.def("is_almost_epi", [](const Morphism& f) { return verdict_to_py(is_almost_epi(f)); });
  m.def("has_epi_precover", [](const PrecoverClass& c, const ModuleObject& x) { return has_epi_precover(c, x); });

  m.def("build_resolution", [](const PrecoverClass& c, const ModuleObject& x, std::size_t length) {
    return json_to_py(to_json(build_resolution(c, x, length)));
  });
  m.def("relative_ext", [](const PrecoverClass& c, const ModuleObject& x, const ModuleObject& a, std::size_t n) {
    return relative_ext(c, x, a, n).to_string();
  });
  m.def("schanuel_step", [](const PrecoverClass& c, const ModuleObject& x) { return schanuel_step(c, x); });
  m.def("check_E", [](const PrecoverClass& c, const ModuleObject& x, std::size_t n) { return verdict_to_py(check_E(c, x, n)); });
  m.def("check_R", [](const PrecoverClass& c, const ModuleObject& x, std::size_t n) { return verdict_to_py(check_R(c, x, n)); });
  m.def("check_S", [](const PrecoverClass& c, const ModuleObject& x, std::size_t n) { return verdict_to_py(check_S(c, x, n)); });

  m.def(
      "enumerate_modules",
      [](const RingSpec& r, std::size_t bound) {
        UniverseSpec u;
        u.ring = r;
        u.max_total_multiplicity = bound;
        return enumerate_modules(u);
      },
      py::arg("ring"), py::arg("bound"));
  m.def("suite_ids", &suite_ids);
  m.def("example_ids", &example_ids);
  m.def(
      "run_suite",
      [](const std::string& id, const PrecoverClass& c, std::size_t bound, std::size_t max_n) {
        UniverseSpec u;
        u.ring = c.ring();
        u.max_total_multiplicity = bound;
        return report_to_py(run_suite(id, c, u, max_n));
      },
      py::arg("suite_id"), py::arg("cls"), py::arg("bound") = 4, py::arg("max_n") = 2);
  m.def("reproduce", [](const std::string& id) { return report_to_py(reproduce(id)); });

  m.def(
      "run_config",
      [](const std::string& text) -> py::tuple {
        ScenarioConfig cfg;
        try {
          cfg = parse_config(text);
        } catch (const Error& e) {
          py::list records;
          records.append(json_to_py(Json{{"kind", "error"}, {"message", e.what()}}));
          return py::make_tuple(kExitInvalid, std::string("error: ") + e.what() + "\n", records);
        }
        const auto result = run_scenario(cfg);
        py::list records;
        for (const auto& r : result.records) records.append(json_to_py(r));
        return py::make_tuple(result.exit_code, result.output, records);
      },
      "Run a scenario written in the config grammar; returns (exit_code, output, records).");
}
