#ifndef MATDECIDE_DECIDERS_HPP
#define MATDECIDE_DECIDERS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matdecide/int_matrix.hpp"

namespace matdecide {

struct DecisionOptions {
  /// Also run PDA emptiness on the pushdown image and require agreement
  /// with the direct saturation (throws InternalError otherwise).
  bool checked = false;
};

struct Decision {
  bool holds = false;
  std::string explanation;

  explicit operator bool() const noexcept { return holds; }
};

/// Is y in the group generated by `gens`? Decided exactly for 2x2 integer
/// matrices: determinant gate, pruning of non-unimodular generators, the
/// membership machine over gens and their inverses, coset conversion into
/// the free group, then emptiness. Throws std::invalid_argument unless every
/// matrix is 2x2.
Decision subgroup_membership_gl2(IntMatrix const& y,
                                 std::vector<IntMatrix> const& gens,
                                 DecisionOptions const& options = {});

/// Is I a product of k >= 1 of the generators? Exact for 2x2 matrices.
/// Throws std::invalid_argument on an empty list or a non-2x2 matrix.
Decision identity_in_semigroup_gl2(std::vector<IntMatrix> const& gens,
                                   DecisionOptions const& options = {});

/// Generator indices (1-based) of a product.
using IndexWitness = std::vector<std::size_t>;

/// Shortest, then lexicographically least, index sequence of length
/// 1..max_len whose product is I. Absence proves nothing. Any dimension.
std::optional<IndexWitness> identity_in_semigroup_bounded(
    std::vector<IntMatrix> const& gens, std::size_t max_len);

/// Same search with an arbitrary target.
std::optional<IndexWitness> membership_bounded(
    IntMatrix const& y, std::vector<IntMatrix> const& gens,
    std::size_t max_len);

std::string to_string(IndexWitness const& w);

}  // namespace matdecide

#endif  // MATDECIDE_DECIDERS_HPP
