#ifndef MATDECIDE_INT_MATRIX_HPP
#define MATDECIDE_INT_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace matdecide {

using Integer = mpz_class;

/// Compares |a| with |b|.
inline int cmp_abs(Integer const& a, Integer const& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/// Raised when an inverse over the integers is requested for a matrix whose
/// determinant is not +1 or -1.
class NotUnimodular : public std::domain_error {
 public:
  NotUnimodular() : std::domain_error("not invertible over the integers") {}
};

/// Square matrix with arbitrary-precision integer entries.
///
/// Immutable after construction: every operation returns a fresh value, so
/// matrices can be used directly as keys in ordered or hashed containers.
class IntMatrix {
 public:
  /// Builds an n x n matrix from row-major entries. Throws
  /// std::invalid_argument unless n >= 1 and entries.size() == n * n.
  IntMatrix(std::size_t n, std::vector<Integer> entries);

  /// Convenience constructor for small literals, e.g. {{1, 2}, {0, 1}}.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  Integer const& at(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  std::vector<Integer> const& entries() const noexcept { return entries_; }

  IntMatrix operator*(IntMatrix const& rhs) const;
  bool operator==(IntMatrix const& rhs) const noexcept;
  bool operator!=(IntMatrix const& rhs) const noexcept {
    return !(*this == rhs);
  }
  /// Total order: dimension first, then entries row-major.
  bool operator<(IntMatrix const& rhs) const noexcept;

  Integer determinant() const;
  bool is_unimodular() const;
  bool is_identity() const noexcept;

  /// Exact inverse of a unimodular matrix; throws NotUnimodular otherwise.
  IntMatrix inverse_unimodular() const;

  /// Largest absolute value among the entries.
  Integer max_abs_entry() const;

  std::size_t hash() const noexcept;

 private:
  std::size_t n_;
  std::vector<Integer> entries_;
};

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b);
Integer determinant(IntMatrix const& m);
IntMatrix inverse_unimodular(IntMatrix const& m);
bool is_unimodular(IntMatrix const& m);

/// Product of a nonempty sequence of matrices, left to right.
IntMatrix product(std::vector<IntMatrix> const& factors);

/// Text form: row-major nested arrays of decimal strings,
/// e.g. [["1","2"],["0","1"]].
std::string to_string(IntMatrix const& m);
std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

}  // namespace matdecide

template <>
struct std::hash<matdecide::IntMatrix> {
  std::size_t operator()(matdecide::IntMatrix const& m) const noexcept {
    return m.hash();
  }
};

#endif  // MATDECIDE_INT_MATRIX_HPP
