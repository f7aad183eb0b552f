#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monodromy/certificate.hpp"
#include "monodromy/config.hpp"
#include "monodromy/document.hpp"
#include "monodromy/equiv.hpp"
#include "monodromy/garside.hpp"
#include "monodromy/verify.hpp"

namespace py = pybind11;
using namespace monodromy;

namespace {

SearchLimits make_limits(int depth, std::size_t states, int jobs) {
  SearchLimits l;
  l.max_depth = depth;
  l.max_states = states;
  l.jobs = jobs;
  return l;
}

py::dict search_dict(const SearchResult& r) {
  const MoveCounts c = count_moves(r.certificate);
  py::dict out;
  out["verdict"] = to_string(r.verdict);
  out["reason"] = r.reason;
  out["states_visited"] = r.states_visited;
  out["certificate"] = r.found() ? py::object(py::str(certificate_to_json(r.certificate)))
                                 : py::object(py::none());
  py::dict counts;
  counts["hurwitz"] = c.hurwitz;
  counts["conj"] = c.conj;
  counts["insert"] = c.insert;
  counts["cancel"] = c.cancel;
  out["counts"] = counts;
  return out;
}

Factorization from_json(const std::string& text) { return parse_factorization_document(text).value; }

}  // namespace

PYBIND11_MODULE(_monodromy, m) {
  m.doc() = "Braid monodromy factorizations: words, Hurwitz moves and equivalence searches";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters") = std::vector<int>{})
      .def_property_readonly("strands", &BraidWord::strands)
      .def_property_readonly("letters", &BraidWord::letters)
      .def("inverse", &BraidWord::inverse)
      .def("power", &BraidWord::power)
      .def("__mul__", [](const BraidWord& a, const BraidWord& b) { return a * b; })
      .def("__len__", &BraidWord::size)
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
      .def("__str__", &BraidWord::to_string)
      .def("__repr__", [](const BraidWord& w) {
        return "BraidWord(" + std::to_string(w.strands()) + ", [" + w.to_string() + "])";
      });

  m.def("parse_word", [](const std::string& text, int strands) { return parse_braid_word(text, strands); },
        py::arg("text"), py::arg("strands"), "Parse '1 -2 3' or letter syntax such as 'bacb a^-1'.");
  m.def("format_letters", &format_letters);
  m.def("words_equal", &words_equal, "Equality in the braid group.");
  m.def("normal_form", [](const BraidWord& w) { return normal_form(w).to_string(); });
  m.def("normal_form_word", [](const BraidWord& w) { return normal_form(w).to_word(); });
  m.def("permutation", [](const BraidWord& w) { return permutation_of(w).to_string(); },
        "Cycle notation of the induced permutation.");
  m.def("garside_delta", &garside_delta);

  py::class_<Factorization>(m, "Factorization")
      .def(py::init<int>(), py::arg("strands"))
      .def_static("from_json", &from_json)
      .def("to_json", [](const Factorization& s, int indent) { return to_json({"", s}, indent); },
           py::arg("indent") = 2)
      .def_readonly("strands", &Factorization::strands)
      .def("__len__", &Factorization::size)
      .def("__eq__", [](const Factorization& a, const Factorization& b) { return a == b; })
      .def("__str__", [](const Factorization& s) { return to_string(s); })
      .def("__repr__", [](const Factorization& s) { return "Factorization(" + to_string(s) + ")"; });

  m.def("read_factorization", [](const std::string& path) { return read_factorization_file(path).value; });
  m.def("alpha", &alpha, "Product of the factors.");
  m.def("hurwitz_R", &hurwitz_R, py::arg("s"), py::arg("i"));
  m.def("hurwitz_L", &hurwitz_L, py::arg("s"), py::arg("i"));
  m.def("insert_pair", &insert_pair, py::arg("s"), py::arg("i"), py::arg("g"));
  m.def("cancel_pair", &cancel_pair, py::arg("s"), py::arg("i"));
  m.def("simultaneous_conjugate", &simultaneous_conjugate);
  m.def("concat", &concat);
  m.def("power", &power);
  m.def("delta_squared", &delta_squared);
  m.def("delta_tilde_squared", &delta_tilde_squared);
  m.def("factorizations_equal", &factorizations_equal, "Factor-wise equality in the braid group.");

  m.def("invariants", [](const Factorization& s) {
    py::dict out;
    out["multi_degree"] = multi_degree(s).to_string();
    out["c_multi_degree"] = c_multi_degree(s);
    out["gamma"] = transposition_list(sym_image(s));
    out["subgroup_order"] = generated_sym_subgroup(s).order();
    return out;
  });

  m.def("hurwitz_search",
        [](const Factorization& s1, const Factorization& s2, int depth, std::size_t states, int jobs) {
          SearchResult r;
          {
            py::gil_scoped_release release;
            r = bfs_hurwitz_equiv(s1, s2, make_limits(depth, states, jobs));
          }
          return search_dict(r);
        },
        py::arg("s1"), py::arg("s2"), py::arg("depth") = SearchLimits{}.max_depth,
        py::arg("states") = SearchLimits{}.max_states, py::arg("jobs") = 1);
  m.def("weak_equiv",
        [](const Factorization& s1, const Factorization& s2, int depth, std::size_t states, int jobs) {
          SearchResult r;
          {
            py::gil_scoped_release release;
            r = bfs_weak_equiv(s1, s2, make_limits(depth, states, jobs));
          }
          return search_dict(r);
        },
        py::arg("s1"), py::arg("s2"), py::arg("depth") = SearchLimits{}.max_depth,
        py::arg("states") = SearchLimits{}.max_states, py::arg("jobs") = 1);
  m.def("rewrite_main",
        [](const Factorization& s1, const Factorization& s2) {
          SearchResult r;
          {
            py::gil_scoped_release release;
            r = rewrite_theorem_main(s1, s2);
          }
          return search_dict(r);
        },
        py::arg("s1"), py::arg("s2"));

  m.def("check_certificate",
        [](const Factorization& s1, const Factorization& s2, const std::string& cert) {
          const CertificateCheck c = check_certificate(s1, s2, parse_certificate(cert, s1.strands));
          return py::make_tuple(c.ok, c.diagnostic);
        },
        py::arg("s1"), py::arg("s2"), py::arg("certificate"),
        "Replay a JSON certificate; returns (ok, diagnostic).");
  m.def("apply_certificate", [](const Factorization& s, const std::string& cert) {
    return apply_certificate(s, parse_certificate(cert, s.strands));
  });

  m.def("gen_instances",
        [](int strands, int n, const std::string& profile, std::uint64_t seed, int count) {
          py::list out;
          for (const auto& p : gen_instances(strands, n, profile, seed, count)) {
            out.append(py::make_tuple(p.name, p.first, p.second));
          }
          return out;
        },
        py::arg("m"), py::arg("n") = 1, py::arg("profile") = "conjugate",
        py::arg("seed") = default_instance_seed(), py::arg("count") = 20);

  m.def("verify",
        [](bool as_json) {
          const VerificationReport r = verify_paper(VerifyOptions{});
          return py::make_tuple(r.passed(), as_json ? r.to_json() : r.to_text());
        },
        py::arg("as_json") = false, "Run the verification suite; returns (passed, report).");
}
