#ifndef MATDECIDE_FREE_WORD_HPP
#define MATDECIDE_FREE_WORD_HPP

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace matdecide {

/// A signed generator: +i stands for generator i, -i for its inverse
/// (generators are numbered from 1).
using Letter = int;

constexpr Letter inverse_letter(Letter x) noexcept { return -x; }
constexpr int generator_of(Letter x) noexcept { return x < 0 ? -x : x; }

/// Element of a free group, always stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;

  /// Reduces `letters` on construction. Throws std::invalid_argument on a
  /// zero letter.
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(int index, int sign = 1);

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  /// Largest generator index used, 0 for the identity.
  int max_generator() const noexcept;

  FreeWord operator*(FreeWord const& rhs) const;
  FreeWord inverse() const;

  bool operator==(FreeWord const& rhs) const = default;
  bool operator<(FreeWord const& rhs) const noexcept {
    return letters_ < rhs.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

FreeWord concat_reduce(FreeWord const& u, FreeWord const& v);
FreeWord invert(FreeWord const& u);
bool is_identity(FreeWord const& u);

/// True iff no adjacent pair x x^-1 occurs.
bool is_reduced(std::vector<Letter> const& letters);

/// Parses "a b' a", "a^-1 b", "ab'a" or "ε"/"" (identity). Generators are
/// named a..z. Throws std::invalid_argument on anything else.
FreeWord parse_word(std::string_view text);

/// Renders letters separated by single spaces, inverses as x'. The identity
/// renders as "ε".
std::string to_string(FreeWord const& w);
std::ostream& operator<<(std::ostream& os, FreeWord const& w);

}  // namespace matdecide

template <>
struct std::hash<matdecide::FreeWord> {
  std::size_t operator()(matdecide::FreeWord const& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w.letters()) {
      h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // MATDECIDE_FREE_WORD_HPP
