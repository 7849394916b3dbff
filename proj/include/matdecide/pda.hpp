#ifndef MATDECIDE_PDA_HPP
#define MATDECIDE_PDA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "matdecide/free_word.hpp"
#include "matdecide/valence_automaton.hpp"

namespace matdecide {

/// Stack symbols are signed generator letters (+i / -i).
using StackSymbol = Letter;

struct PdaTransition {
  enum class Guard {
    any,         // fires on any stack, empty included
    top_is,      // top symbol equals `guard_symbol`
    top_is_not,  // stack empty or top differs from `guard_symbol`
  };
  enum class Action { none, push, pop };

  std::size_t from;
  InputSymbol input;
  Guard guard = Guard::any;
  StackSymbol guard_symbol = 0;
  Action action = Action::none;
  StackSymbol push_symbol = 0;
  std::size_t to;
};

/// Pushdown automaton accepting by accepting state and empty stack together.
class Pda {
 public:
  Pda(std::size_t rank, std::vector<std::string> alphabet);

  std::size_t add_state(std::string name);
  /// Throws std::invalid_argument on unknown states, letters outside the
  /// rank, or a pop not guarded by top_is.
  void add_transition(PdaTransition t);
  void set_initial(std::size_t s);
  void set_accepting(std::size_t s, bool accepting = true);

  std::size_t rank() const noexcept { return rank_; }
  std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }
  std::size_t num_states() const noexcept { return names_.size(); }
  std::string const& state_name(std::size_t s) const { return names_.at(s); }
  std::size_t initial() const noexcept { return initial_; }
  bool is_accepting(std::size_t s) const { return accepting_.at(s); }
  std::vector<PdaTransition> const& transitions() const noexcept {
    return transitions_;
  }

 private:
  void check_symbol(StackSymbol x) const;

  std::size_t rank_;
  std::vector<std::string> alphabet_;
  std::vector<std::string> names_;
  std::vector<bool> accepting_;
  std::vector<PdaTransition> transitions_;
  std::size_t initial_ = 0;
};

/// Splits every edge labelled f1...fn through n-1 fresh states. Each letter
/// x becomes the pair "top is x^-1: pop" / "top is not x^-1: push x", so the
/// stack always holds the free reduction of the register word. The edge's
/// input symbol is read on the first letter; an ε-word edge becomes one
/// transition with no stack action.
Pda from_free_automaton(ValenceAutomaton const& v);

/// Exact emptiness by saturation of same-level and pop summaries over
/// (state, top-of-stack). True means the language is empty.
bool pda_emptiness(Pda const& p);

struct SaturationStats {
  std::size_t states = 0;     // after trimming and letter splitting
  std::size_t additions = 0;  // pairs added to the relation
  bool empty = true;
};

/// Direct emptiness check on a free-word automaton: the least relation R
/// containing the diagonal and ε-edges, closed under x R x^-1 matching and
/// transitivity, relates the initial state to an accepting state exactly
/// when some accepting path's label reduces to the identity.
SaturationStats free_automaton_saturation(ValenceAutomaton const& v);

/// True means the language is empty.
bool free_automaton_emptiness(ValenceAutomaton const& v);

std::string to_string(Pda const& p);

}  // namespace matdecide

#endif  // MATDECIDE_PDA_HPP
