#include "matdecide/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "matdecide/deciders.hpp"
#include "matdecide/io.hpp"
#include "matdecide/oracle.hpp"
#include "matdecide/pda.hpp"
#include "matdecide/sanov.hpp"
#include "matdecide/valence_automaton.hpp"

namespace matdecide::cli {

namespace {

using io::json;

constexpr std::size_t kDefaultBound = 8;
// Depth of the group-word search used only to decorate a positive answer.
constexpr std::size_t kWitnessDepth = 5;

struct Report {
  int code = kYes;
  std::vector<std::string> lines;
  json data = json::object();
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument starting with '[' or '{' is inline JSON, anything else a path.
json load_json(std::string const& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    return io::parse_json(arg, "<argument>");
  }
  return io::parse_json(io::read_file(arg), arg);
}

IntMatrix load_matrix(std::string const& arg, std::string const& what) {
  try {
    return io::matrix_from_json(load_json(arg), what);
  } catch (io::FormatError const& e) {
    throw io::FormatError(std::string(e.what()) + " (in " + arg + ")");
  }
}

std::vector<IntMatrix> load_gens(std::string const& arg) {
  std::vector<IntMatrix> gens;
  try {
    gens = io::matrices_from_json(load_json(arg), "gens");
  } catch (io::FormatError const& e) {
    throw io::FormatError(std::string(e.what()) + " (in " + arg + ")");
  }
  if (gens.empty()) throw io::FormatError("gens: no generators in " + arg);
  return gens;
}

SimulationBounds simulation_bounds() {
  SimulationBounds b;
  if (char const* env = std::getenv("MATDECIDE_REGISTER_CAP")) {
    Integer cap;
    if (cap.set_str(env, 10) != 0 || cap < 0) {
      throw UsageError(std::string("MATDECIDE_REGISTER_CAP is not a "
                                   "non-negative integer: ") +
                       env);
    }
    b.register_cap = cap;
  }
  return b;
}

json witness_json(IndexWitness const& w) {
  json out = json::array();
  for (auto i : w) out.push_back(i);
  return out;
}

std::string group_witness_text(oracle::GroupWitness const& w) {
  if (w.empty()) return "(empty product)";
  std::string s;
  for (int i : w) {
    if (!s.empty()) s += ' ';
    s += std::to_string(i);
  }
  return s;
}

Report bounded_report(std::string const& subject,
                      std::optional<IndexWitness> const& w,
                      std::size_t bound) {
  Report r;
  r.data["bound"] = bound;
  if (w) {
    r.code = kYes;
    r.lines = {subject + ": yes", "witness: " + to_string(*w)};
    r.data["result"] = "yes";
    r.data["witness"] = witness_json(*w);
  } else {
    r.code = kUnknown;
    std::string why = "no product of length <= " + std::to_string(bound) +
                      "; bounded search cannot certify a negative";
    r.lines = {subject + ": unknown", "explanation: " + why};
    r.data["result"] = "unknown";
    r.data["explanation"] = why;
  }
  return r;
}

Report cmd_factor(std::string const& arg) {
  IntMatrix m = load_matrix(arg, "matrix");
  Report r;
  auto w = factor_in_sanov(m);
  r.data["matrix"] = io::matrix_to_json(m);
  r.data["member"] = w.has_value();
  if (w) {
    r.lines = {to_string(*w)};
    r.data["word"] = to_string(*w);
  } else {
    r.code = kNo;
    r.lines = {"not a member"};
  }
  return r;
}

Report cmd_cosets() {
  auto const& t = sanov_coset_table();
  Report r;
  json reps = json::array();
  for (std::size_t c = 0; c < t.size(); ++c) {
    r.lines.push_back(std::to_string(c) + " " + to_string(t.rep(c)));
    reps.push_back(io::matrix_to_json(t.rep(c)));
  }
  r.data["size"] = t.size();
  r.data["reps"] = std::move(reps);
  return r;
}

Report cmd_member(std::string const& target_arg, std::string const& gens_arg,
                  std::optional<std::size_t> bounded, bool checked) {
  IntMatrix y = load_matrix(target_arg, "target");
  std::vector<IntMatrix> gens = load_gens(gens_arg);
  if (gens.front().dim() != y.dim()) {
    throw io::FormatError("target and generators have different dimensions");
  }
  if (bounded || y.dim() != 2) {
    std::size_t k = bounded.value_or(kDefaultBound);
    Report r = bounded_report("member", membership_bounded(y, gens, k), k);
    r.data["mode"] = "bounded";
    return r;
  }
  Decision d = subgroup_membership_gl2(y, gens, {checked});
  Report r;
  r.code = d.holds ? kYes : kNo;
  r.lines = {std::string("member: ") + (d.holds ? "yes" : "no"),
             "explanation: " + d.explanation};
  r.data["mode"] = "decided";
  r.data["result"] = d.holds ? "yes" : "no";
  r.data["explanation"] = d.explanation;
  if (d.holds) {
    // Search over the unimodular generators only, keeping original indices.
    std::vector<IntMatrix> usable;
    std::vector<int> original;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_unimodular()) {
        usable.push_back(gens[i]);
        original.push_back(static_cast<int>(i) + 1);
      }
    }
    if (auto w = oracle::group_word_search(y, usable, kWitnessDepth)) {
      for (int& i : *w) i = i < 0 ? -original[-i - 1] : original[i - 1];
      r.lines.push_back("witness: " + group_witness_text(*w));
      r.data["witness"] = *w;
    }
  }
  return r;
}

Report cmd_identity(std::string const& gens_arg,
                    std::optional<std::size_t> bounded, bool checked) {
  std::vector<IntMatrix> gens = load_gens(gens_arg);
  if (bounded || gens.front().dim() != 2) {
    std::size_t k = bounded.value_or(kDefaultBound);
    Report r =
        bounded_report("identity", identity_in_semigroup_bounded(gens, k), k);
    r.data["mode"] = "bounded";
    return r;
  }
  Decision d = identity_in_semigroup_gl2(gens, {checked});
  Report r;
  r.code = d.holds ? kYes : kNo;
  r.lines = {std::string("identity: ") + (d.holds ? "yes" : "no"),
             "explanation: " + d.explanation};
  r.data["mode"] = "decided";
  r.data["result"] = d.holds ? "yes" : "no";
  r.data["explanation"] = d.explanation;
  if (d.holds) {
    if (auto w = identity_in_semigroup_bounded(gens, kDefaultBound)) {
      r.lines.push_back("witness: " + to_string(*w));
      r.data["witness"] = witness_json(*w);
    }
  }
  return r;
}

ValenceAutomaton load_automaton(std::string const& arg) {
  try {
    return io::automaton_from_json(load_json(arg));
  } catch (io::FormatError const& e) {
    throw io::FormatError(arg + ": " + e.what());
  }
}

Report cmd_empty(std::string const& file, std::optional<std::size_t> bounded,
                 bool checked) {
  ValenceAutomaton v = load_automaton(file);
  std::size_t k = bounded.value_or(kDefaultBound);
  SimulationBounds bounds = simulation_bounds();

  std::optional<bool> empty;
  std::string how;
  if (v.domain().kind == LabelDomain::Kind::word) {
    empty = free_automaton_emptiness(v);
    how = "saturation on the free-word automaton";
    if (checked && pda_emptiness(from_free_automaton(v)) != *empty) {
      throw InternalError("saturation and pushdown emptiness disagree");
    }
  } else if (v.domain().size == 2) {
    ValenceAutomaton free =
        to_free_group_automaton(prune_noninvertible(v), sanov_coset_table());
    empty = free_automaton_emptiness(free);
    how = "pruned, converted through the Sanov cosets, then saturated";
    if (checked && pda_emptiness(from_free_automaton(free)) != *empty) {
      throw InternalError("saturation and pushdown emptiness disagree");
    }
  }

  Report r;
  WitnessSearch ws;
  if (!empty || !*empty) ws = shortest_accepted_input(v, k, bounds);
  if (!empty && ws.input) empty = false;

  if (!empty) {
    r.code = kUnknown;
    how = "no exact procedure for " + to_string(v.domain()) +
          "; no accepted input of length <= " + std::to_string(k);
    r.lines = {"UNKNOWN", "explanation: " + how};
    r.data["result"] = "unknown";
  } else if (*empty) {
    r.code = kNo;
    r.lines = {"EMPTY"};
    r.data["result"] = "empty";
  } else {
    r.code = kYes;
    r.lines = {"NONEMPTY"};
    r.data["result"] = "nonempty";
    if (ws.input) {
      std::string text = ws.input->empty() ? "ε" : v.decode_input(*ws.input);
      r.lines.push_back("witness: " + text);
      r.data["witness"] = text;
    } else {
      r.lines.push_back("witness: none found up to length " +
                        std::to_string(k));
    }
  }
  if (r.code != kUnknown) r.data["method"] = how;
  return r;
}

Report cmd_convert(std::string const& file, bool prune, bool to_free,
                   bool to_pda, std::string const& output) {
  ValenceAutomaton v = load_automaton(file);
  if (prune || to_free) {
    if (v.domain().kind != LabelDomain::Kind::matrix) {
      throw UsageError("--prune/--free need a matrix automaton");
    }
    v = prune_noninvertible(v);
  }
  if (to_free) v = to_free_group_automaton(v, sanov_coset_table());
  Report r;
  std::string text;
  if (to_pda) {
    if (v.domain().kind != LabelDomain::Kind::word) {
      throw UsageError("--pda needs a word automaton (add --free)");
    }
    text = to_string(from_free_automaton(v));
    if (!text.empty() && text.back() == '\n') text.pop_back();
  } else {
    r.data = io::automaton_to_json(v);
    text = r.data.dump(2);
  }
  if (!output.empty()) {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw io::FormatError(output + ": cannot write");
    f << text << '\n';
  } else {
    r.lines = {text};
  }
  return r;
}

Report cmd_search(std::string const& target_arg, std::string const& gens_arg,
                  std::size_t max_len, bool group) {
  IntMatrix y = load_matrix(target_arg, "target");
  std::vector<IntMatrix> gens = load_gens(gens_arg);
  if (gens.front().dim() != y.dim()) {
    throw io::FormatError("target and generators have different dimensions");
  }
  if (!group) {
    std::optional<IndexWitness> found;
    for (auto const& p : oracle::enumerate_products(gens, max_len)) {
      if (p.value == y) {
        found = p.witness;
        break;
      }
    }
    Report r = bounded_report("search", found, max_len);
    r.data["mode"] = "semigroup";
    return r;
  }
  Report r;
  r.data["bound"] = max_len;
  r.data["mode"] = "group";
  if (auto w = oracle::group_word_search(y, gens, max_len)) {
    r.lines = {"search: yes", "witness: " + group_witness_text(*w)};
    r.data["result"] = "yes";
    r.data["witness"] = *w;
  } else {
    r.code = kUnknown;
    r.lines = {"search: unknown", "explanation: no group word of length <= " +
                                      std::to_string(max_len)};
    r.data["result"] = "unknown";
  }
  return r;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decision procedures for integer matrix semigroups via "
               "valence automata",
               "matdecide"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string matrix_arg, target_arg, gens_arg, file_arg, output;
  std::optional<std::size_t> bounded;
  std::size_t max_len = oracle::kDefaultDepth;
  bool checked = false, prune = false, to_free = false, to_pda = false,
       group = false;

  auto* factor = app.add_subcommand(
      "factor", "Factor a matrix over the Sanov generators a, b");
  factor->add_option("matrix", matrix_arg, "Matrix JSON or file")->required();

  auto* cosets =
      app.add_subcommand("cosets", "List the 24 right coset representatives");

  auto* member =
      app.add_subcommand("member", "Is the target in the generated group?");
  member->add_option("--target", target_arg, "Matrix JSON or file")
      ->required();
  member->add_option("--gens", gens_arg, "Matrix list JSON or file")
      ->required();
  member->add_option("--bounded", bounded,
                     "Semigroup product search up to this length instead")
      ->check(CLI::PositiveNumber);
  member->add_flag("--checked", checked, "Cross-check with PDA emptiness");

  auto* identity =
      app.add_subcommand("identity", "Is I a nonempty product of generators?");
  identity->add_option("--gens", gens_arg, "Matrix list JSON or file")
      ->required();
  identity->add_option("--bounded", bounded, "Search products up to length")
      ->check(CLI::PositiveNumber);
  identity->add_flag("--checked", checked, "Cross-check with PDA emptiness");

  auto* empty = app.add_subcommand("empty", "Emptiness of a valence automaton");
  empty->add_option("automaton", file_arg, "Automaton JSON or file")
      ->required();
  empty->add_option("--bounded", bounded,
                    "Witness search length (default 8)")
      ->check(CLI::NonNegativeNumber);
  empty->add_flag("--checked", checked, "Cross-check with PDA emptiness");

  auto* convert =
      app.add_subcommand("convert", "Re-emit an automaton, optionally "
                                    "pruned / converted");
  convert->add_option("automaton", file_arg, "Automaton JSON or file")
      ->required();
  convert->add_flag("--prune", prune, "Drop non-unimodular edges");
  convert->add_flag("--free", to_free,
                    "Prune and convert to a free-word automaton");
  convert->add_flag("--pda", to_pda, "Print the pushdown automaton");
  convert->add_option("-o,--output", output, "Write to file");

  auto* search = app.add_subcommand("search", "Brute-force product search");
  search->add_option("--target", target_arg, "Matrix JSON or file")
      ->required();
  search->add_option("--gens", gens_arg, "Matrix list JSON or file")
      ->required();
  search->add_option("--max-len", max_len, "Maximum product length");
  search->add_flag("--group", group, "Allow inverses of the generators");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Report report;
  try {
    if (*factor) {
      report = cmd_factor(matrix_arg);
    } else if (*cosets) {
      report = cmd_cosets();
    } else if (*member) {
      report = cmd_member(target_arg, gens_arg, bounded, checked);
    } else if (*identity) {
      report = cmd_identity(gens_arg, bounded, checked);
    } else if (*empty) {
      report = cmd_empty(file_arg, bounded, checked);
    } else if (*convert) {
      report = cmd_convert(file_arg, prune, to_free, to_pda, output);
    } else if (*search) {
      report = cmd_search(target_arg, gens_arg, max_len, group);
    }
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (io::FormatError const& e) {
    err << "error: " << e.what() << '\n';
    return kDataErr;
  } catch (InternalError const& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kDataErr;
  } catch (std::domain_error const& e) {
    err << "error: " << e.what() << '\n';
    return kDataErr;
  } catch (std::length_error const& e) {
    err << "error: " << e.what() << '\n';
    return kDataErr;
  }

  if (format == "structured" && !*convert) {
    report.data["exit_code"] = report.code;
    out << report.data.dump(2) << '\n';
  } else {
    for (auto const& line : report.lines) out << line << '\n';
  }
  return report.code;
}

}  // namespace matdecide::cli
