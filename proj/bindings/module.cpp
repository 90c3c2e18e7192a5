// Python bindings for the main operations. Matrices cross the boundary as
// lists of entry strings in the same grammar the CLI prints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidrep/lawrence.hpp"
#include "braidrep/text_io.hpp"

namespace py = pybind11;
using namespace braidrep;

namespace {

std::vector<std::vector<std::string>> poly_matrix_strings(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r].push_back(format_poly(m.at(r, c)));
  return out;
}

std::vector<std::vector<std::string>> ring_matrix_strings(const GroupRingMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      out[r].push_back(format_group_ring(m.at(r, c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact braid group representations (Burau, Gassner, Lawrence, "
            "reduced) over multivariate Laurent polynomials";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);

  m.def(
      "braid_eq",
      [](int n, const std::string& a, const std::string& b) {
        return braid_eq(parse_braid_word(a, n), parse_braid_word(b, n));
      },
      py::arg("strands"), py::arg("word_a"), py::arg("word_b"),
      "decide equality of two braid words in B_n");

  m.def(
      "normal_form",
      [](int n, const std::string& word) {
        return format_braid_word(
            garside_normal_form(parse_braid_word(word, n)).canonical_word());
      },
      py::arg("strands"), py::arg("word"),
      "canonical word of the Garside normal form");

  m.def(
      "artin_act",
      [](int n, const std::string& braid, const std::string& free) {
        return format_free_word(
            artin_act(parse_braid_word(braid, n), parse_free_word(free, n)));
      },
      py::arg("strands"), py::arg("braid_word"), py::arg("free_word"),
      "the braid group action on the free group");

  m.def(
      "burau",
      [](int n, const std::string& word) {
        return poly_matrix_strings(burau_oracle(n, parse_braid_word(word, n)));
      },
      py::arg("strands"), py::arg("word"),
      "unreduced Burau matrix over (s, t)");

  m.def(
      "universal",
      [](int n, const std::string& word) {
        return ring_matrix_strings(phi(parse_braid_word(word, n)).matrix);
      },
      py::arg("strands"), py::arg("word"),
      "universal representation matrix over the group ring");

  m.def(
      "reduced",
      [](int n, const std::string& word) {
        return ring_matrix_strings(phi_r(parse_braid_word(word, n)).matrix);
      },
      py::arg("strands"), py::arg("word"),
      "reduced universal representation matrix");

  m.def(
      "gassner",
      [](int n, const std::string& word) {
        return poly_matrix_strings(gassner_matrix(n, parse_braid_word(word, n)));
      },
      py::arg("strands"), py::arg("word"),
      "Gassner matrix of a pure braid word over (t_1..t_n)");

  m.def(
      "lawrence",
      [](int n, int m_, const std::string& word) {
        return ring_matrix_strings(
            universal_lawrence(n, m_, parse_braid_word(word, n)));
      },
      py::arg("n"), py::arg("m"), py::arg("word"),
      "universal Lawrence matrix on the C(n,m) basis");

  m.def("lawrence_dimension", &lawrence_dimension, py::arg("n"), py::arg("m"),
        "(n+m-1)!/(n-1)!");

  m.def(
      "verify_braid_relations",
      [](int n) {
        for (int i = 1; i <= n - 1; ++i)
          for (int j = i + 1; j <= n - 1; ++j) {
            BraidWord lhs = j == i + 1 ? BraidWord(n, {{i, 1}, {j, 1}, {i, 1}})
                                       : BraidWord(n, {{i, 1}, {j, 1}});
            BraidWord rhs = j == i + 1 ? BraidWord(n, {{j, 1}, {i, 1}, {j, 1}})
                                       : BraidWord(n, {{j, 1}, {i, 1}});
            if (!(phi(lhs).matrix == phi(rhs).matrix)) return false;
          }
        return true;
      },
      py::arg("strands"),
      "check the universal representation against the braid relations");

  m.def(
      "quadratic_check",
      [](int i, int n) { return quadratic_check_universal(i, n); },
      py::arg("i"), py::arg("n"),
      "the universal quadratic relation for sigma_i");

  m.def(
      "hecke_entry_claim",
      [](int n, int m_, int i) { return lawrence_entry_claim(n, m_, i); },
      py::arg("n"), py::arg("m"), py::arg("i"),
      "entries of (phi+qI)(phi-I) have the Hecke-ideal form");
}
