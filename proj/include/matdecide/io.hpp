#ifndef MATDECIDE_IO_HPP
#define MATDECIDE_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "matdecide/int_matrix.hpp"
#include "matdecide/valence_automaton.hpp"

namespace matdecide::io {

/// Malformed input. The message carries line/column or a field path.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using nlohmann::json;

/// Parses JSON text, reporting syntax errors as "<source>:line:col: ...".
json parse_json(std::string_view text, std::string const& source);

json matrix_to_json(IntMatrix const& m);
/// Accepts [["1","2"],["0","1"]]; plain JSON integers are tolerated.
IntMatrix matrix_from_json(json const& j, std::string const& field = "matrix");

json matrices_to_json(std::vector<IntMatrix> const& ms);
std::vector<IntMatrix> matrices_from_json(json const& j,
                                          std::string const& field = "gens");

/// Automaton file:
///   {"states": [...], "alphabet": [...], "label_domain": "matrix(2)",
///    "initial": "q1", "accepting": [...],
///    "edges": [{"from": "q1", "input": "a" | null, "label": ..., "to": ...}]}
/// Labels are matrices in the nested-array form or words such as "a b'".
json automaton_to_json(ValenceAutomaton const& v);
ValenceAutomaton automaton_from_json(json const& j);

LabelDomain parse_label_domain(std::string_view text);

std::string read_file(std::string const& path);

}  // namespace matdecide::io

#endif  // MATDECIDE_IO_HPP
