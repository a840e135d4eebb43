#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regdissect/corpus.hpp"
#include "regdissect/dissector.hpp"
#include "regdissect/grammar.hpp"
#include "regdissect/hierarchy.hpp"
#include "regdissect/language.hpp"
#include "regdissect/semilinear.hpp"
#include "regdissect/separation.hpp"
#include "regdissect/serialize.hpp"
#include "regdissect/upsets.hpp"

namespace py = pybind11;
using namespace regdissect;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them into plain dicts.
template <typename T>
std::string dump(const T& value) {
  return nlohmann::json(value).dump();
}

std::vector<ArithmeticProgression> to_triples(
    const std::vector<std::tuple<Natural, Natural, Natural>>& ts) {
  std::vector<ArithmeticProgression> out;
  for (const auto& [a, b, k] : ts) out.push_back({a, b, k});
  return out;
}

DissectionConfig make_config(Natural max_length, std::size_t threshold, double window,
                             Natural modulus_cap) {
  DissectionConfig c;
  c.max_length = max_length;
  c.threshold = threshold;
  c.window_fraction = window;
  c.symbol_modulus_cap = modulus_cap;
  return c;
}

#define CONFIG_ARGS                                                        \
  py::arg("max_length") = 400, py::arg("threshold") = 20,                  \
  py::arg("window") = 0.25, py::arg("modulus_cap") = 8

void bind_upsets(py::module_& m) {
  py::class_<UltimatelyPeriodicSet>(m, "UltimatelyPeriodicSet")
      .def(py::init<>())
      .def_static("from_parts", &UltimatelyPeriodicSet::from_parts, py::arg("threshold"),
                  py::arg("period"), py::arg("finite_part"), py::arg("residues"))
      .def_static("naturals", &UltimatelyPeriodicSet::naturals)
      .def_static("finite",
                  [](const std::vector<Natural>& v) { return UltimatelyPeriodicSet::finite(v); })
      .def_static(
          "from_progressions",
          [](const std::vector<std::tuple<Natural, Natural, Natural>>& ts) {
            return from_progressions(to_triples(ts));
          },
          py::arg("triples"))
      .def("__contains__", &UltimatelyPeriodicSet::contains)
      .def("contains", &UltimatelyPeriodicSet::contains)
      .def_property_readonly("threshold", &UltimatelyPeriodicSet::threshold)
      .def_property_readonly("period", &UltimatelyPeriodicSet::period)
      .def_property_readonly("finite_part", &UltimatelyPeriodicSet::finite_part)
      .def_property_readonly("residues", &UltimatelyPeriodicSet::residues)
      .def("is_infinite", [](const UltimatelyPeriodicSet& x) { return is_infinite(x); })
      .def("infinite_residues",
           [](const UltimatelyPeriodicSet& x, Natural m) { return infinite_residues(x, m); })
      .def("__or__", &set_union)
      .def("__and__", &intersect)
      .def("__sub__", [](const UltimatelyPeriodicSet& x, const UltimatelyPeriodicSet& y) {
        return difference(x, y);
      })
      .def("__invert__", [](const UltimatelyPeriodicSet& x) { return complement(x); })
      .def("__add__", &minkowski_sum)
      .def("__eq__", &UltimatelyPeriodicSet::operator==)
      .def("__hash__",
           [](const UltimatelyPeriodicSet& x) { return std::hash<std::string>{}(x.to_string()); })
      .def("to_json", [](const UltimatelyPeriodicSet& x) { return dump(x); })
      .def("__repr__", &UltimatelyPeriodicSet::to_string);
}

void bind_semilinear(py::module_& m) {
  py::class_<LinearSet>(m, "LinearSet")
      .def(py::init<Vector, std::vector<Vector>>(), py::arg("offset"), py::arg("periods"))
      .def_static("from_matrix", &LinearSet::from_matrix)
      .def_property_readonly("offset", &LinearSet::offset)
      .def_property_readonly("periods", &LinearSet::periods)
      .def("__contains__", &LinearSet::contains);

  py::class_<SemiLinearSet>(m, "SemiLinearSet")
      .def(py::init<std::size_t, std::vector<LinearSet>>(), py::arg("dimension"),
           py::arg("components") = std::vector<LinearSet>{})
      .def_property_readonly("dimension", &SemiLinearSet::dimension)
      .def_property_readonly("components", &SemiLinearSet::components)
      .def("__contains__", [](const SemiLinearSet& s, const Vector& v) { return member(s, v); })
      .def("is_infinite", [](const SemiLinearSet& s) { return is_infinite(s); })
      .def("image_under_weights", &image_under_weights)
      .def("to_upset", &to_upset)
      .def("to_json", [](const SemiLinearSet& s) { return dump(s); });

  m.def("parikh_of", &parikh_of, py::arg("word"), py::arg("alphabet"));
  m.def("tilde_psi_decompositions", &tilde_psi_decompositions, py::arg("word"),
        py::arg("words"));
}

void bind_automata(py::module_& m) {
  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("alphabet", &Dfa::alphabet)
      .def_property_readonly("num_states", &Dfa::num_states)
      .def("accepts", &Dfa::accepts)
      .def("__eq__", &Dfa::operator==)
      .def("to_json", [](const Dfa& d) { return dump(d); })
      .def_static("from_json",
                  [](const std::string& text) { return nlohmann::json::parse(text).get<Dfa>(); })
      .def("__repr__", [](const Dfa& d) { return to_string(d); });

  m.def("length_modulus_dfa", &length_modulus_dfa, py::arg("modulus"), py::arg("residue"),
        py::arg("alphabet"));
  m.def("prefix_dfa", &prefix_dfa, py::arg("symbol"), py::arg("alphabet"));
  m.def("symbol_count_modulus_dfa", &symbol_count_modulus_dfa, py::arg("symbol"),
        py::arg("modulus"), py::arg("residue"), py::arg("alphabet"));
  m.def("upset_length_dfa", &upset_length_dfa, py::arg("lengths"), py::arg("alphabet"));
  m.def("dfa_complement", [](const Dfa& d) { return complement(d); });
  m.def("dfa_intersection",
        [](const Dfa& a, const Dfa& b) { return product(a, b, ProductKind::kIntersection); });
  m.def("dfa_union", [](const Dfa& a, const Dfa& b) { return product(a, b, ProductKind::kUnion); });
  m.def("dfa_difference",
        [](const Dfa& a, const Dfa& b) { return product(a, b, ProductKind::kDifference); });
  m.def("dfa_is_empty", &is_empty);
}

void bind_languages(py::module_& m) {
  py::class_<LanguageHandle>(m, "Language")
      .def_static(
          "from_grammar",
          [](const std::string& id, const std::string& text) {
            return LanguageHandle::from_grammar(id, parse_grammar(text));
          },
          py::arg("id"), py::arg("text"))
      .def_static("from_dfa", &LanguageHandle::from_dfa, py::arg("id"), py::arg("dfa"))
      .def_static("builtin", &LanguageHandle::builtin, py::arg("name"))
      .def_static("corpus", &corpus_language, py::arg("name"))
      .def_property_readonly("id", &LanguageHandle::id)
      .def_property_readonly("alphabet", &LanguageHandle::alphabet)
      .def("__contains__", &LanguageHandle::contains)
      .def(
          "enumerate",
          [](const LanguageHandle& h, Natural n) { return h.enumerate(n).members; },
          py::arg("max_length"))
      .def("lengths",
           [](const LanguageHandle& h, Natural n) {
             const LengthBits bits = h.length_spectrum(n);
             std::vector<Natural> out;
             for (Natural i = 0; i < bits.size(); ++i) {
               if (bits[i]) out.push_back(i);
             }
             return out;
           })
      .def("describe", &LanguageHandle::describe)
      .def("__or__", &unite)
      .def("__sub__", &subtract)
      .def("__and__", &restrict_to)
      .def("reversed", &reverse)
      .def("__repr__", &LanguageHandle::describe);

  m.def("builtin_names", &LanguageHandle::builtin_names);
  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const auto& g : corpus_grammars()) out.push_back(g.name);
    return out;
  });
}

void bind_analysis(py::module_& m) {
  m.def(
      "dissect",
      [](const LanguageHandle& h, Natural n, std::size_t t, double w, Natural cap) {
        return dump(dissect_auto(h, make_config(n, t, w, cap)));
      },
      py::arg("language"), CONFIG_ARGS);
  m.def(
      "verify",
      [](const LanguageHandle& h, const Dfa& c, Natural n, std::size_t t, double w,
         Natural cap) { return dump(verify_dissection(h, c, make_config(n, t, w, cap))); },
      py::arg("language"), py::arg("witness"), CONFIG_ARGS);
  m.def(
      "separate",
      [](const LanguageHandle& cover, const LanguageHandle& inner, Natural n, std::size_t t,
         double w, Natural cap) {
        return dump(iseparate({cover, inner}, make_config(n, t, w, cap)));
      },
      py::arg("cover"), py::arg("inner"), CONFIG_ARGS);
  m.def(
      "factorial_decision",
      [](const std::vector<std::tuple<Natural, Natural, Natural>>& ts) {
        return dump(factorial_dissection_decision(to_triples(ts)));
      },
      py::arg("triples"));
  m.def(
      "level_bound",
      [](const std::string& text) { return dump(level_bound(parse_class_expr(text))); },
      py::arg("expression"));
  m.def(
      "normalize",
      [](const std::string& text) { return normalize(parse_class_expr(text)).to_string(); },
      py::arg("expression"));
  m.def("difference_bound", &difference_bound, py::arg("i"), py::arg("j"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dissection certificates for languages by regular sets";

  // Owned by the module; the translator only borrows it.
  static PyObject* error = nullptr;
  error = PyErr_NewException("regdissect._core.Error", PyExc_RuntimeError, nullptr);
  m.add_object("Error", py::reinterpret_borrow<py::object>(error));
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const Error& e, py::object certificate) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("certificate") = std::move(certificate);
      PyErr_SetObject(error, exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const StrategyFailedError& e) {
      raise(e, py::str(dump(e.certificate())));
    } catch (const Error& e) {
      raise(e, py::none());
    }
  });

  bind_upsets(m);
  bind_semilinear(m);
  bind_automata(m);
  bind_languages(m);
  bind_analysis(m);
}
