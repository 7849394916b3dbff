#include "matdecide/free_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace matdecide {

namespace {

// Stack-based free reduction; the output vector doubles as the stack.
void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == inverse_letter(x)) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) {
      throw std::invalid_argument("free word letter 0 is not a generator");
    }
    push_reduced(letters_, x);
  }
}

FreeWord FreeWord::generator(int index, int sign) {
  if (index < 1) {
    throw std::invalid_argument("generator indices start at 1");
  }
  return FreeWord({sign < 0 ? -index : index});
}

int FreeWord::max_generator() const noexcept {
  int best = 0;
  for (Letter x : letters_) {
    best = std::max(best, generator_of(x));
  }
  return best;
}

FreeWord FreeWord::operator*(FreeWord const& rhs) const {
  // Both operands are reduced, so cancellation happens only at the seam.
  std::size_t i = letters_.size();
  std::size_t j = 0;
  while (i > 0 && j < rhs.letters_.size() &&
         letters_[i - 1] == inverse_letter(rhs.letters_[j])) {
    --i;
    ++j;
  }
  FreeWord out;
  out.letters_.reserve(i + rhs.letters_.size() - j);
  out.letters_.assign(letters_.begin(), letters_.begin() + i);
  out.letters_.insert(out.letters_.end(), rhs.letters_.begin() + j,
                      rhs.letters_.end());
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(inverse_letter(*it));
  }
  return out;
}

FreeWord concat_reduce(FreeWord const& u, FreeWord const& v) { return u * v; }

FreeWord invert(FreeWord const& u) { return u.inverse(); }

bool is_identity(FreeWord const& u) { return u.is_identity(); }

bool is_reduced(std::vector<Letter> const& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i] == inverse_letter(letters[i + 1])) {
      return false;
    }
  }
  return true;
}

FreeWord parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto fail = [&](std::string const& why) {
    throw std::invalid_argument("bad free word \"" + std::string(text) +
                                "\" at offset " + std::to_string(i) + ": " +
                                why);
  };
  static constexpr std::string_view kEpsilon = "ε";
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (text.substr(i, kEpsilon.size()) == kEpsilon) {
      i += kEpsilon.size();
    } else if (c >= 'a' && c <= 'z') {
      Letter x = c - 'a' + 1;
      ++i;
      if (i < text.size() && text[i] == '\'') {
        x = -x;
        ++i;
      } else if (text.substr(i, 3) == "^-1") {
        x = -x;
        i += 3;
      }
      letters.push_back(x);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  return FreeWord(std::move(letters));
}

std::string to_string(FreeWord const& w) {
  if (w.is_identity()) {
    return "ε";
  }
  std::string out;
  for (Letter x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('a' + generator_of(x) - 1);
    if (x < 0) out += '\'';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, FreeWord const& w) {
  return os << to_string(w);
}

}  // namespace matdecide
