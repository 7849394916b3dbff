#include "matdecide/sanov.hpp"

#include <deque>
#include <string>

namespace matdecide {

namespace sanov {

IntMatrix const& gen_a() {
  static IntMatrix const m{{1, 2}, {0, 1}};
  return m;
}

IntMatrix const& gen_b() {
  static IntMatrix const m{{1, 0}, {2, 1}};
  return m;
}

std::array<IntMatrix, 3> const& gl2_generators() {
  static std::array<IntMatrix, 3> const gens{
      IntMatrix{{0, -1}, {1, 0}},
      IntMatrix{{1, 1}, {0, 1}},
      IntMatrix{{1, 0}, {0, -1}},
  };
  return gens;
}

}  // namespace sanov

namespace {

IntMatrix const& letter_matrix(Letter x) {
  static IntMatrix const a_inv{{1, -2}, {0, 1}};
  static IntMatrix const b_inv{{1, 0}, {-2, 1}};
  switch (x) {
    case 1:
      return sanov::gen_a();
    case -1:
      return a_inv;
    case 2:
      return sanov::gen_b();
    case -2:
      return b_inv;
    default:
      throw std::invalid_argument("letter outside rank 2: " +
                                  std::to_string(x));
  }
}

// Words longer than this are refused rather than materialized.
constexpr std::size_t kMaxWordLength = std::size_t{1} << 26;

void append_power(std::vector<Letter>& out, Letter gen, Integer const& k) {
  if (cmp_abs(k, Integer(static_cast<unsigned long>(kMaxWordLength))) > 0 ||
      out.size() + Integer(abs(k)).get_ui() > kMaxWordLength) {
    throw std::length_error("Sanov factorization exceeds " +
                            std::to_string(kMaxWordLength) + " letters");
  }
  long e = k.get_si();
  Letter x = e < 0 ? -gen : gen;
  for (long i = 0, n = e < 0 ? -e : e; i < n; ++i) {
    out.push_back(x);
  }
}

}  // namespace

IntMatrix eval_word(FreeWord const& w) {
  IntMatrix acc = IntMatrix::identity(2);
  for (Letter x : w.letters()) {
    acc = acc * letter_matrix(x);
  }
  return acc;
}

// Continued-fraction peeling. With m = [[a,b],[c,d]] congruent to I mod 2,
// a is odd and c is even throughout. For |a| > |c| we left-multiply by A^-k,
// sending a to a - 2kc; for |c| > |a| by B^-k, sending c to c - 2ka. The
// nearest integer k to a/(2c) (resp. c/(2a)) is never a tie because the
// numerator is odd and the denominator even, so the new entry is strictly
// smaller than the old min(|a|,|c|) and the loop terminates at c = 0.
std::optional<FreeWord> factor_in_sanov(IntMatrix const& m) {
  if (m.dim() != 2) {
    return std::nullopt;
  }
  Integer a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
  if (a * d - b * c != 1) {
    return std::nullopt;
  }
  if (mpz_even_p(a.get_mpz_t()) || mpz_odd_p(b.get_mpz_t()) ||
      mpz_odd_p(c.get_mpz_t()) || mpz_even_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  std::vector<Letter> letters;
  Integer k, num, den;
  while (c != 0) {
    if (cmp_abs(a, c) > 0) {
      // k = floor((a + c) / (2c)) = round(a / (2c))
      num = a + c;
      den = 2 * c;
      mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      append_power(letters, 1, k);
      a -= 2 * k * c;
      b -= 2 * k * d;
    } else {
      num = c + a;
      den = 2 * a;
      mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      append_power(letters, 2, k);
      c -= 2 * k * a;
      d -= 2 * k * b;
    }
  }
  // Remaining factor is +-[[1, b], [0, 1]]; only the + sign lies in Sanov.
  if (a != 1) {
    return std::nullopt;
  }
  Integer half = b / 2;
  append_power(letters, 1, half);
  return FreeWord(std::move(letters));
}

std::size_t CosetTable::coset_of(IntMatrix const& g) const {
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (factor_in_sanov(g * rep_inverses_[i])) {
      return i;
    }
  }
  throw InternalError("matrix " + to_string(g) + " lies in no coset");
}

CosetTable build_coset_table() {
  constexpr std::size_t kSafetyCap = 256;
  CosetTable t;
  auto const& gens = sanov::gl2_generators();
  t.generators_.assign(gens.begin(), gens.end());
  t.reps_.push_back(IntMatrix::identity(2));
  t.rep_inverses_.push_back(IntMatrix::identity(2));
  t.action_.emplace_back(gens.size());

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t c = frontier.front();
    frontier.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMatrix moved = t.reps_[c] * gens[g];
      std::size_t target = t.reps_.size();
      for (std::size_t i = 0; i < t.reps_.size(); ++i) {
        if (factor_in_sanov(moved * t.rep_inverses_[i])) {
          target = i;
          break;
        }
      }
      if (target == t.reps_.size()) {
        if (t.reps_.size() == kSafetyCap) {
          throw InternalError("coset closure exceeded " +
                              std::to_string(kSafetyCap) + " cosets");
        }
        t.rep_inverses_.push_back(moved.inverse_unimodular());
        t.reps_.push_back(std::move(moved));
        t.action_.emplace_back(gens.size());
        frontier.push_back(target);
      }
      t.action_[c][g] = target;
    }
  }
  return t;
}

CosetTable const& sanov_coset_table() {
  static CosetTable const table = build_coset_table();
  return table;
}

SchreierStep schreier_rewrite(CosetTable const& table, std::size_t c,
                              IntMatrix const& g) {
  if (g.dim() != 2 || !g.is_unimodular()) {
    throw NotUnimodular();
  }
  IntMatrix moved = table.rep(c) * g;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (auto w = factor_in_sanov(moved * table.rep_inverse(i))) {
      return {i, std::move(*w)};
    }
  }
  throw InternalError("no coset matched for " + to_string(g));
}

}  // namespace matdecide
