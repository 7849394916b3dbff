#include "matdecide/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace matdecide::io {

json parse_json(std::string_view text, std::string const& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (json::parse_error const& e) {
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    // drop nlohmann's "[json.exception.parse_error.101] " prefix
    if (auto pos = what.find("] "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw FormatError(source + ":" + std::to_string(line) + ":" +
                      std::to_string(col) + ": " + what);
  }
}

json matrix_to_json(IntMatrix const& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Integer parse_integer(json const& e, std::string const& field) {
  if (e.is_number_integer()) {
    return e.is_number_unsigned() ? Integer(e.get<unsigned long>())
                                  : Integer(e.get<long>());
  }
  if (!e.is_string()) {
    throw FormatError(field + ": expected a decimal integer string");
  }
  std::string s = e.get<std::string>();
  std::size_t digits = s.size() - (s.size() > 0 && (s[0] == '-' || s[0] == '+'));
  bool ok = digits > 0 && s.find_first_not_of("0123456789", s.size() - digits) ==
                              std::string::npos;
  if (!ok) {
    throw FormatError(field + ": \"" + s + "\" is not a decimal integer");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

IntMatrix matrix_from_json(json const& j, std::string const& field) {
  if (!j.is_array() || j.empty()) {
    throw FormatError(field + ": expected a nonempty array of rows");
  }
  std::size_t n = j.size();
  std::vector<Integer> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) {
      throw FormatError(row_field + ": expected a row of " + std::to_string(n) +
                        " entries (matrices are square)");
    }
    for (std::size_t k = 0; k < n; ++k) {
      entries.push_back(
          parse_integer(j[i][k], row_field + "[" + std::to_string(k) + "]"));
    }
  }
  return IntMatrix(n, std::move(entries));
}

json matrices_to_json(std::vector<IntMatrix> const& ms) {
  json out = json::array();
  for (auto const& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

std::vector<IntMatrix> matrices_from_json(json const& j,
                                          std::string const& field) {
  if (!j.is_array()) {
    throw FormatError(field + ": expected an array of matrices");
  }
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(matrix_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].dim() != out[0].dim()) {
      throw FormatError(field + "[" + std::to_string(i) +
                        "]: dimension differs from " + field + "[0]");
    }
  }
  return out;
}

LabelDomain parse_label_domain(std::string_view text) {
  auto parse = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (text.substr(0, prefix.size()) != prefix || text.back() != ')') {
      return std::nullopt;
    }
    std::string_view num =
        text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos ||
        num.size() > 6) {
      return std::nullopt;
    }
    return std::stoul(std::string(num));
  };
  if (!text.empty()) {
    if (auto n = parse("matrix(")) return LabelDomain::matrices(*n);
    if (auto r = parse("word(")) return LabelDomain::words(*r);
  }
  throw FormatError("label_domain: expected \"matrix(n)\" or \"word(r)\", got \"" +
                    std::string(text) + "\"");
}

json automaton_to_json(ValenceAutomaton const& v) {
  json j;
  j["states"] = v.state_names();
  j["alphabet"] = v.alphabet();
  j["label_domain"] = to_string(v.domain());
  j["initial"] = v.num_states() ? json(v.state_name(v.initial())) : json();
  json acc = json::array();
  for (std::size_t s : v.accepting_states()) acc.push_back(v.state_name(s));
  j["accepting"] = std::move(acc);
  json edges = json::array();
  for (auto const& e : v.edges()) {
    json je;
    je["from"] = v.state_name(e.from);
    je["input"] = e.input ? json(v.alphabet()[*e.input]) : json();
    if (auto const* m = std::get_if<IntMatrix>(&e.label)) {
      je["label"] = matrix_to_json(*m);
    } else {
      je["label"] = to_string(std::get<FreeWord>(e.label));
    }
    je["to"] = v.state_name(e.to);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

namespace {

json const& require(json const& j, char const* key, std::string const& ctx) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(ctx + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> string_list(json const& j, std::string const& field) {
  if (!j.is_array()) throw FormatError(field + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw FormatError(field + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace

ValenceAutomaton automaton_from_json(json const& j) {
  if (!j.is_object()) throw FormatError("automaton: expected an object");
  auto states = string_list(require(j, "states", "automaton"), "states");
  auto alphabet = string_list(require(j, "alphabet", "automaton"), "alphabet");
  json const& dom = require(j, "label_domain", "automaton");
  if (!dom.is_string()) throw FormatError("label_domain: expected a string");
  LabelDomain domain = parse_label_domain(dom.get<std::string>());

  std::optional<ValenceAutomaton> built;
  try {
    built.emplace(domain, alphabet);
  } catch (std::invalid_argument const& e) {
    throw FormatError(std::string("automaton: ") + e.what());
  }
  ValenceAutomaton& v = *built;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!index.emplace(states[i], i).second) {
      throw FormatError("states[" + std::to_string(i) + "]: duplicate state '" +
                        states[i] + "'");
    }
    v.add_state(states[i]);
  }
  auto lookup = [&](json const& name, std::string const& field) {
    if (!name.is_string()) throw FormatError(field + ": expected a state name");
    auto it = index.find(name.get<std::string>());
    if (it == index.end()) {
      throw FormatError(field + ": unknown state '" + name.get<std::string>() +
                        "'");
    }
    return it->second;
  };
  if (states.empty()) throw FormatError("states: at least one state required");
  v.set_initial(lookup(require(j, "initial", "automaton"), "initial"));
  json const& acc = require(j, "accepting", "automaton");
  if (!acc.is_array()) throw FormatError("accepting: expected an array");
  for (std::size_t i = 0; i < acc.size(); ++i) {
    v.set_accepting(lookup(acc[i], "accepting[" + std::to_string(i) + "]"));
  }
  json const& edges = require(j, "edges", "automaton");
  if (!edges.is_array()) throw FormatError("edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string ctx = "edges[" + std::to_string(i) + "]";
    json const& e = edges[i];
    std::size_t from = lookup(require(e, "from", ctx), ctx + ".from");
    std::size_t to = lookup(require(e, "to", ctx), ctx + ".to");
    InputSymbol input;
    if (e.contains("input") && !e.at("input").is_null()) {
      json const& in = e.at("input");
      if (!in.is_string()) throw FormatError(ctx + ".input: expected a string or null");
      if (in.get<std::string>() != "ε" && !in.get<std::string>().empty()) {
        input = v.symbol_index(in.get<std::string>());
        if (!input) {
          throw FormatError(ctx + ".input: '" + in.get<std::string>() +
                            "' is not in the alphabet");
        }
      }
    }
    json const& lab = require(e, "label", ctx);
    Label label = IntMatrix::identity(1);
    try {
      if (domain.kind == LabelDomain::Kind::matrix) {
        label = matrix_from_json(lab, ctx + ".label");
      } else {
        if (!lab.is_string()) throw FormatError(ctx + ".label: expected a word string");
        label = parse_word(lab.get<std::string>());
      }
      v.add_edge(from, input, std::move(label), to);
    } catch (std::invalid_argument const& ex) {
      throw FormatError(ctx + ".label: " + ex.what());
    }
  }
  return std::move(*built);
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace matdecide::io
