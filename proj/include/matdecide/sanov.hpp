#ifndef MATDECIDE_SANOV_HPP
#define MATDECIDE_SANOV_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matdecide/free_word.hpp"
#include "matdecide/int_matrix.hpp"

namespace matdecide {

/// Raised when a structural invariant of the coset machinery fails. Seeing
/// one means the membership oracle is broken, not that the input was bad.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Sanov subgroup <A, B> of SL(2,Z), with A = [[1,2],[0,1]] and
/// B = [[1,0],[2,1]]. It is free on {A, B} and has index 24 in GL(2,Z).
/// Letter 1 ('a') maps to A, letter 2 ('b') maps to B.
namespace sanov {

IntMatrix const& gen_a();
IntMatrix const& gen_b();

/// Generating set of GL(2,Z) used to close the coset table:
/// S = [[0,-1],[1,0]], T = [[1,1],[0,1]], J = [[1,0],[0,-1]].
std::array<IntMatrix, 3> const& gl2_generators();

constexpr std::size_t kIndexInGL2 = 24;

}  // namespace sanov

/// Product of A/B and their inverses in word order. Throws
/// std::invalid_argument on letters beyond rank 2.
IntMatrix eval_word(FreeWord const& w);

/// The unique reduced word over {a, b} evaluating to `m`, or nullopt when
/// `m` is not in the Sanov subgroup (including every non-2x2 input).
std::optional<FreeWord> factor_in_sanov(IntMatrix const& m);

/// Right cosets Sanov*g of the Sanov subgroup in GL(2,Z).
class CosetTable {
 public:
  std::size_t size() const noexcept { return reps_.size(); }
  std::vector<IntMatrix> const& reps() const noexcept { return reps_; }
  IntMatrix const& rep(std::size_t c) const { return reps_.at(c); }
  IntMatrix const& rep_inverse(std::size_t c) const {
    return rep_inverses_.at(c);
  }
  std::vector<IntMatrix> const& gl2_generators() const noexcept {
    return generators_;
  }
  /// Index of the coset reached from coset c by right multiplication with
  /// gl2_generators()[gen].
  std::size_t act(std::size_t c, std::size_t gen) const {
    return action_.at(c).at(gen);
  }

  /// Index of the coset containing a unimodular 2x2 matrix.
  std::size_t coset_of(IntMatrix const& g) const;

  /// The identity coset; reps()[kIdentityCoset] is I.
  static constexpr std::size_t kIdentityCoset = 0;

 private:
  friend CosetTable build_coset_table();
  std::vector<IntMatrix> reps_;
  std::vector<IntMatrix> rep_inverses_;
  std::vector<IntMatrix> generators_;
  std::vector<std::vector<std::size_t>> action_;
};

/// BFS closure of the right cosets from I under the GL(2,Z) generators.
/// Throws InternalError if more than 256 cosets appear.
CosetTable build_coset_table();

/// The process-wide table, built once on first use.
CosetTable const& sanov_coset_table();

struct SchreierStep {
  std::size_t coset;
  FreeWord word;
};

/// Returns (c', w) with reps[c] * g == eval_word(w) * reps[c']. Throws
/// NotUnimodular for a non-unimodular g and InternalError if no coset
/// matches.
SchreierStep schreier_rewrite(CosetTable const& table, std::size_t c,
                              IntMatrix const& g);

}  // namespace matdecide

#endif  // MATDECIDE_SANOV_HPP
