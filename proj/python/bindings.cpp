#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "matdecide/deciders.hpp"
#include "matdecide/sanov.hpp"

namespace py = pybind11;
using namespace matdecide;

namespace {

// Python ints of any size and decimal strings both become exact integers.
Integer to_integer(py::handle h) {
  std::string text = py::str(h);
  Integer z;
  if (z.set_str(text, 10) != 0) {
    throw py::value_error("not an integer: " + text);
  }
  return z;
}

IntMatrix to_matrix(py::handle rows) {
  auto outer = py::cast<py::sequence>(rows);
  std::size_t n = outer.size();
  std::vector<Integer> entries;
  for (auto row : outer) {
    auto r = py::cast<py::sequence>(row);
    if (r.size() != n) throw py::value_error("matrix must be square");
    for (auto x : r) entries.push_back(to_integer(x));
  }
  return IntMatrix(n, std::move(entries));
}

py::list from_matrix(IntMatrix const& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      row.append(py::reinterpret_steal<py::object>(
          PyLong_FromString(m.at(i, j).get_str().c_str(), nullptr, 10)));
    }
    rows.append(row);
  }
  return rows;
}

std::vector<IntMatrix> to_matrices(py::iterable gens) {
  std::vector<IntMatrix> out;
  for (auto g : gens) out.push_back(to_matrix(g));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact decision procedures for integer matrix semigroups";

  py::register_exception<NotUnimodular>(m, "NotUnimodular", PyExc_ValueError);

  m.def(
      "factor_in_sanov",
      [](py::handle mat) -> std::optional<std::string> {
        auto w = factor_in_sanov(to_matrix(mat));
        if (!w) return std::nullopt;
        return to_string(*w);
      },
      py::arg("matrix"),
      "Word over a, b (a' for inverses) for a Sanov member, else None.");

  m.def(
      "eval_word",
      [](std::string const& word) { return from_matrix(eval_word(parse_word(word))); },
      py::arg("word"));

  m.def("coset_representatives", [] {
    py::list reps;
    auto const& t = sanov_coset_table();
    for (std::size_t c = 0; c < t.size(); ++c) reps.append(from_matrix(t.rep(c)));
    return reps;
  });

  m.def(
      "subgroup_membership",
      [](py::handle y, py::iterable gens, bool checked) {
        Decision d = subgroup_membership_gl2(to_matrix(y), to_matrices(gens),
                                             {checked});
        return py::make_tuple(d.holds, d.explanation);
      },
      py::arg("target"), py::arg("gens"), py::arg("checked") = false,
      "Exact for 2x2: returns (holds, explanation).");

  m.def(
      "identity_in_semigroup",
      [](py::iterable gens, bool checked) {
        Decision d = identity_in_semigroup_gl2(to_matrices(gens), {checked});
        return py::make_tuple(d.holds, d.explanation);
      },
      py::arg("gens"), py::arg("checked") = false,
      "Exact for 2x2: returns (holds, explanation).");

  m.def(
      "identity_bounded",
      [](py::iterable gens, std::size_t max_len) {
        return identity_in_semigroup_bounded(to_matrices(gens), max_len);
      },
      py::arg("gens"), py::arg("max_len") = 8,
      "1-based generator indices of a product equal to I, or None.");

  m.def(
      "membership_bounded",
      [](py::handle y, py::iterable gens, std::size_t max_len) {
        return membership_bounded(to_matrix(y), to_matrices(gens), max_len);
      },
      py::arg("target"), py::arg("gens"), py::arg("max_len") = 8);
}
