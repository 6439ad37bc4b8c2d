#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdikit/algebra.hpp"
#include "sdikit/complexity.hpp"
#include "sdikit/decisions.hpp"
#include "sdikit/equations.hpp"
#include "sdikit/errors.hpp"
#include "sdikit/io.hpp"
#include "sdikit/oracle.hpp"
#include "sdikit/sdi.hpp"

namespace py = pybind11;
using namespace sdikit;

namespace {

SdiVariant variant_of(const std::string& name) { return oracle::parse_variant(name); }

std::vector<Word> sorted(const oracle::WordSet& set) { return {set.begin(), set.end()}; }

}  // namespace

PYBIND11_MODULE(_sdikit, m) {
  m.doc() = "Site-directed insertion on regular languages";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Nfa>(m, "Nfa")
      .def_static("parse", &io::parse_automaton, py::arg("text"))
      .def_static("from_words",
                  [](const std::string& alphabet, const std::vector<Word>& words) {
                    return finite_language(Alphabet(alphabet), words);
                  },
                  py::arg("alphabet"), py::arg("words"))
      .def_static("universal", [](const std::string& a) { return universal_language(Alphabet(a)); })
      .def_static("nonempty_words", [](const std::string& a) { return nonempty_words(Alphabet(a)); })
      .def("serialize", &io::serialize_automaton)
      .def("accepts", [](const Nfa& a, const std::string& w) { return accepts(a, w); })
      .def("enumerate", &enumerate_language, py::arg("max_len"))
      .def("is_empty", &is_empty)
      .def("is_finite", &is_finite_language)
      .def("shortest_word", &shortest_word)
      .def_property_readonly("alphabet", [](const Nfa& a) { return a.alphabet().symbols(); })
      .def_property_readonly("state_count", &Nfa::state_count)
      .def("__repr__", [](const Nfa& a) {
        return "<Nfa states=" + std::to_string(a.state_count()) + " alphabet=" +
               std::string(a.alphabet().symbols()) + ">";
      });

  m.def("equivalent", [](const Nfa& a, const Nfa& b) { return equivalent(a, b); });
  m.def("is_subset", [](const Nfa& a, const Nfa& b) { return is_subset(a, b); });
  m.def("intersection", &product_intersection);
  m.def("union", &union_of);

  m.def("sdi", [](const Nfa& a, const Nfa& b) { return sdi_nfa_direct(a, b); });
  m.def("asdi", [](const Nfa& a, const Nfa& b) { return asdi_nfa_direct(a, b); });
  m.def("insert_word",
        [](const Nfa& a, const std::string& y, const std::string& variant) {
          return insert_word_nfa(a, y, variant_of(variant));
        },
        py::arg("a"), py::arg("y"), py::arg("variant") = "maxsdi");
  m.def("finite_into_regular",
        [](const std::string& variant, const std::vector<Word>& words, const Nfa& a) {
          return finite_into_regular(variant_of(variant), words, a);
        });
  m.def("find_insertion",
        [](const std::string& w, const Nfa& a, const Nfa& b,
           const std::string& variant) -> std::optional<std::tuple<Word, Word, Word, Word, Word>> {
          auto d = find_insertion(w, a, b, variant_of(variant));
          if (!d) return std::nullopt;
          return std::tuple{d->x1, d->u, d->z, d->v, d->x2};
        },
        py::arg("w"), py::arg("a"), py::arg("b"), py::arg("variant") = "sdi");

  m.def("oracle", [](const std::string& variant, const std::string& x, const std::string& y) {
    return sorted(oracle::apply(variant_of(variant), x, y));
  });

  py::class_<DecisionReport>(m, "DecisionReport")
      .def_readonly("predicate", &DecisionReport::predicate)
      .def_readonly("answer", &DecisionReport::answer)
      .def_readonly("witness", &DecisionReport::witness)
      .def_readonly("states", &DecisionReport::states)
      .def("__bool__", [](const DecisionReport& r) { return r.answer; });
  m.def("is_sdi_free", &is_sdi_free);
  m.def("is_sdi_independent", &is_sdi_independent);
  m.def("is_asdi_free", &is_asdi_free);
  m.def("is_asdi_independent", &is_asdi_independent);
  m.def("is_closed_under_sdi", [](const Nfa& a) { return is_closed_under_sdi(a); });
  m.def("closed_under_finite",
        [](const std::string& variant, const Nfa& a, const std::vector<Word>& words) {
          return closed_under_finite_maxmin(variant_of(variant), a, words);
        });
  m.def("two_var_solvable", &two_var_solvable);

  m.def("solve",
        [](const std::string& side, const std::string& variant, const Nfa& known, const Nfa& rhs) {
          const auto s = solve(EquationSpec{parse_side(side), variant_of(variant), known, rhs});
          return std::pair{s.solvable, s.candidate.nfa()};
        },
        py::arg("side"), py::arg("variant"), py::arg("known"), py::arg("rhs"));

  m.def("fooling_bound",
        [](const Nfa& a, const std::vector<std::pair<Word, Word>>& pairs) {
          return fooling_set_check(a, FoolingSet{pairs}).bound;
        });
  m.def("state_bound", [](const std::string& construction, std::size_t mm, std::size_t n) {
    if (construction != "sdi" && construction != "asdi") {
      throw InputError("construction must be sdi or asdi");
    }
    return state_bound(construction == "sdi" ? AuditedConstruction::sdi : AuditedConstruction::asdi,
                       mm, n);
  });
}
