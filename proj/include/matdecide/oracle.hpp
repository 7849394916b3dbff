#ifndef MATDECIDE_ORACLE_HPP
#define MATDECIDE_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "matdecide/int_matrix.hpp"

// Brute-force ground truth. Deliberately naive: visited sets are keyed by
// the full decimal serialization of each matrix.
namespace matdecide::oracle {

constexpr std::size_t kDefaultDepth = 8;

struct Product {
  IntMatrix value;
  std::vector<std::size_t> witness;  // 1-based generator indices
};

/// Every distinct product of 1..max_len generators with one shortest
/// witness each, in breadth-first order.
std::vector<Product> enumerate_products(std::vector<IntMatrix> const& gens,
                                        std::size_t max_len = kDefaultDepth);

/// Signed 1-based indices: +i is gens[i-1], -i its inverse.
using GroupWitness = std::vector<int>;

/// Shortest word of length 0..max_len over gens and their inverses that
/// evaluates to y. Throws NotUnimodular if a generator has no integer
/// inverse.
std::optional<GroupWitness> group_word_search(
    IntMatrix const& y, std::vector<IntMatrix> const& gens,
    std::size_t max_len = kDefaultDepth);

IntMatrix evaluate(std::vector<IntMatrix> const& gens,
                   std::vector<std::size_t> const& witness);
IntMatrix evaluate(std::vector<IntMatrix> const& gens,
                   GroupWitness const& witness);

}  // namespace matdecide::oracle

#endif  // MATDECIDE_ORACLE_HPP
