// Python bindings.  Integers cross the boundary as Python ints (via their
// decimal text); Z[b] values and polynomials as canonical strings; reports
// as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubert/conjectures.hpp"
#include "schubert/polynomial_text.hpp"
#include "schubert/relations.hpp"
#include "schubert/report_json.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

py::object to_py_int(const Integer& n) { return py::int_(py::str(n.str())); }

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict expansion_dict(const Expansion& e) {
  py::dict out;
  for (const auto& [w, c] : e.terms) out[py::str(w.to_string())] = to_py_int(c);
  return out;
}

Engine& engine() { return default_engine(); }

}  // namespace

PYBIND11_MODULE(schubert_relations, m) {
  m.doc() = "Exact Schubert and Grothendieck polynomial computations";

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text) { return Permutation::parse(text); }),
           py::arg("text"))
      .def(py::init([](const std::vector<int>& word) { return Permutation::from_one_line(word); }),
           py::arg("word"))
      .def_static("from_lehmer_code", &Permutation::from_lehmer_code)
      .def_static("long_element", &Permutation::long_element)
      .def_static("simple", &Permutation::simple)
      .def_property_readonly("word", [](const Permutation& w) { return w.word(); })
      .def_property_readonly("length", &Permutation::length)
      .def_property_readonly("descents", &Permutation::descents)
      .def_property_readonly("left_descents", &Permutation::left_descents)
      .def_property_readonly("lehmer_code", &Permutation::lehmer_code)
      .def("inverse", &Permutation::inverse)
      .def("__call__", &Permutation::operator())
      .def("__mul__", [](const Permutation& a, const Permutation& b) { return a * b; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", [](const Permutation& w) { return std::hash<Permutation>{}(w); })
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation& w) { return "Permutation('" + w.to_string() + "')"; });
  py::implicitly_convertible<std::string, Permutation>();

  m.def("left_s", &left_s, py::arg("i"), py::arg("w"));
  m.def("right_s", &right_s, py::arg("w"), py::arg("i"));
  m.def("maj", &maj);
  m.def("one_times", &one_times);
  m.def("reduced_words", &reduced_words);
  m.def("left_weak_leq", &left_weak_leq);
  m.def("is_grassmannian", &is_grassmannian);
  m.def("is_inverse_grassmannian", &is_inverse_grassmannian);
  m.def("enumerate_inverse_grassmannian", &enumerate_inverse_grassmannian);

  m.def("schubert_poly", [](const Permutation& w) { return to_string(engine().schubert(w)); });
  m.def("grothendieck_poly",
        [](const Permutation& w) { return to_string(engine().grothendieck(w)); });
  m.def("beta_grothendieck_poly",
        [](const Permutation& w) { return to_string(engine().beta_grothendieck(w)); });

  m.def("structure_coeff", [](const Permutation& u, const Permutation& v, const Permutation& w) {
    return to_py_int(engine().structure_coeff(u, v, w));
  });
  m.def("product_expansion", [](const Permutation& u, const Permutation& v) {
    return expansion_dict(engine().product_expansion(u, v));
  });
  m.def("k_coeff", [](const Permutation& u, const Permutation& v, const Permutation& w) {
    return to_py_int(engine().k_coeff(u, v, w));
  });
  m.def("k_coeff_beta", [](const Permutation& u, const Permutation& v, const Permutation& w) {
    return to_string(engine().k_coeff_beta(u, v, w));
  });
  m.def("k_product_expansion", [](const Permutation& u, const Permutation& v) {
    return expansion_dict(engine().k_product_expansion(u, v));
  });
  m.def("expand_in_schubert", [](const std::string& poly) {
    return expansion_dict(engine().expand_in_schubert(parse_int_poly(poly)));
  });

  m.def("product_multiplicity", [](const Permutation& u, const Permutation& v) {
    return to_py(to_json(product_multiplicity(engine(), u, v)));
  });

  m.def("identities", &identity_catalog);
  m.def(
      "check",
      [](const std::string& identity, const std::string& u, const std::string& v,
         const std::string& w, int i, int k, int alpha, int rank) {
        if (!is_known_identity(identity))
          throw py::value_error("unknown identity '" + identity + "'");
        Instance in;
        in.identity = identity;
        in.u = Permutation::parse(u);
        in.v = Permutation::parse(v);
        in.w = Permutation::parse(w);
        in.i = i;
        in.k = k;
        in.alpha = alpha;
        in.rank = rank;
        return to_py(to_json(run_instance(engine(), in)));
      },
      py::arg("identity"), py::arg("u") = "", py::arg("v") = "", py::arg("w") = "",
      py::arg("i") = 0, py::arg("k") = 0, py::arg("alpha") = 0, py::arg("rank") = 0);
  m.def(
      "verify_all",
      [](const std::string& identity, int n) {
        py::list out;
        for (const auto& in : enumerate_instances(engine(), identity, n))
          out.append(to_py(to_json(run_instance(engine(), in))));
        return out;
      },
      py::arg("identity"), py::arg("n"));
  m.def(
      "sweep",
      [](const std::string& conjecture, int n, int jobs) {
        auto tag = parse_conjecture(conjecture);
        if (!tag) throw py::value_error("unknown conjecture '" + conjecture + "'");
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = sweep(engine(), *tag, n, jobs);
        }
        return to_py(to_json(report));
      },
      py::arg("conjecture"), py::arg("n"), py::arg("jobs") = 1);

  py::register_exception<PermutationError>(m, "PermutationError", PyExc_ValueError);
}
