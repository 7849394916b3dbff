#ifndef MATDECIDE_VALENCE_AUTOMATON_HPP
#define MATDECIDE_VALENCE_AUTOMATON_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "matdecide/free_word.hpp"
#include "matdecide/int_matrix.hpp"
#include "matdecide/sanov.hpp"

namespace matdecide {

/// What the register holds: n x n integer matrices or words of the free
/// group of the given rank.
struct LabelDomain {
  enum class Kind { matrix, word };
  Kind kind = Kind::matrix;
  std::size_t size = 2;  // matrix dimension or free rank

  static LabelDomain matrices(std::size_t n) { return {Kind::matrix, n}; }
  static LabelDomain words(std::size_t rank) { return {Kind::word, rank}; }

  bool operator==(LabelDomain const&) const = default;
};

std::string to_string(LabelDomain const& d);

using Label = std::variant<IntMatrix, FreeWord>;

/// Input symbol index into the alphabet; nullopt is the empty string.
using InputSymbol = std::optional<std::size_t>;

struct Edge {
  std::size_t from;
  InputSymbol input;
  Label label;
  std::size_t to;
};

/// A finite automaton with a register over a multiplicative domain. The
/// register starts at the identity, every transition multiplies it on the
/// right by the edge label, and a string is accepted when some run consumes
/// it, ends in an accepting state and leaves the register at the identity.
class ValenceAutomaton {
 public:
  ValenceAutomaton(LabelDomain domain, std::vector<std::string> alphabet);

  std::size_t add_state(std::string name);
  /// Throws std::invalid_argument on unknown states/symbols or a label that
  /// does not belong to the domain.
  void add_edge(std::size_t from, InputSymbol input, Label label,
                std::size_t to);
  void set_initial(std::size_t state);
  void set_accepting(std::size_t state, bool accepting = true);

  LabelDomain const& domain() const noexcept { return domain_; }
  std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }
  std::size_t num_states() const noexcept { return names_.size(); }
  std::string const& state_name(std::size_t s) const { return names_.at(s); }
  std::vector<std::string> const& state_names() const noexcept {
    return names_;
  }
  std::size_t initial() const noexcept { return initial_; }
  bool is_accepting(std::size_t s) const { return accepting_.at(s); }
  std::vector<std::size_t> accepting_states() const;
  std::vector<Edge> const& edges() const noexcept { return edges_; }

  /// Alphabet index of a symbol, or nullopt if absent.
  std::optional<std::size_t> symbol_index(std::string_view symbol) const;

  /// Splits an input string into symbol indices: on whitespace when it has
  /// any, otherwise one character per symbol. Throws on unknown symbols.
  std::vector<std::size_t> encode_input(std::string_view text) const;
  std::string decode_input(std::vector<std::size_t> const& symbols) const;

  /// Identity element of the register domain.
  Label identity_label() const;

 private:
  LabelDomain domain_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> accepting_;
  std::vector<Edge> edges_;
  std::size_t initial_ = 0;
};

/// Membership machine: q1 -(a, g)-> q2 and q2 -(a, h_i)-> q2; q2 accepts.
ValenceAutomaton build_membership_automaton(IntMatrix const& g,
                                            std::vector<IntMatrix> const& gens);

/// Identity machine: q1 -(a, s_i)-> q2 and q2 -(a, s_i)-> q2; q2 accepts.
/// Every accepted string has length >= 1.
ValenceAutomaton build_identity_automaton(std::vector<IntMatrix> const& gens);

/// Membership universe machine: both states accept, q1 -(a, g)-> q2, and q2
/// carries loops (a, h_i) and (ε, h_i).
ValenceAutomaton build_membership_universe_automaton(
    IntMatrix const& g, std::vector<IntMatrix> const& gens);

/// Identity universe machine: one initial accepting state with loops
/// (a, s_i) and (ε, s_i).
ValenceAutomaton build_identity_universe_automaton(
    std::vector<IntMatrix> const& gens);

/// Drops every matrix-labelled edge whose determinant is not +-1. Such an
/// edge can never lie on an accepting run.
ValenceAutomaton prune_noninvertible(ValenceAutomaton const& v);

/// Coset-product conversion of a GL(2,Z)-labelled automaton into an
/// automaton over the free group of rank 2 (the Sanov subgroup). States are
/// pairs (q, c) numbered q * table.size() + c. Along any run,
/// reps[c0] * (matrix register) == eval_word(word register) * reps[c], so the
/// matrix register is I exactly when the word register is empty and the run
/// is back in the identity coset.
///
/// Throws NotUnimodular if any label is not a unimodular 2x2 matrix.
ValenceAutomaton to_free_group_automaton(ValenceAutomaton const& v,
                                         CosetTable const& table);

enum class BoundedResult { accepted, rejected_at_bound, rejected };

std::string to_string(BoundedResult r);

struct SimulationBounds {
  /// Register cap: max absolute entry for matrices, word length for words.
  /// Defaults to 10^6 and 64 respectively.
  std::optional<Integer> register_cap;
  /// Total configurations explored before giving up with rejected_at_bound.
  std::size_t max_configurations = 200000;

  Integer cap_for(LabelDomain const& d) const;
};

/// Breadth-first search over (state, input position, register) with
/// ε-moves. `accepted` is always definitive; `rejected` only when every
/// configuration was explored without hitting a bound.
BoundedResult bounded_accepts(ValenceAutomaton const& v,
                              std::vector<std::size_t> const& input,
                              SimulationBounds const& bounds = {});
BoundedResult bounded_accepts(ValenceAutomaton const& v,
                              std::string_view input,
                              SimulationBounds const& bounds = {});

struct WitnessSearch {
  std::optional<std::vector<std::size_t>> input;
  /// True when the search ran to max_length without pruning anything, so
  /// absence of a witness is definitive up to that length.
  bool exhaustive = false;
};

/// Shortest accepted input of length <= max_length, found by layered
/// bounded simulation.
WitnessSearch shortest_accepted_input(ValenceAutomaton const& v,
                                      std::size_t max_length,
                                      SimulationBounds const& bounds = {});

}  // namespace matdecide

#endif  // MATDECIDE_VALENCE_AUTOMATON_HPP
