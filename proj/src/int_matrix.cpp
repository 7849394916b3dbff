#include "matdecide/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace matdecide {

IntMatrix::IntMatrix(std::size_t n, std::vector<Integer> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw std::invalid_argument("matrix dimension must be at least 1");
  }
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("matrix is not square: expected " +
                                std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()) {
  if (n_ == 0) {
    throw std::invalid_argument("matrix dimension must be at least 1");
  }
  entries_.reserve(n_ * n_);
  for (auto const& row : rows) {
    if (row.size() != n_) {
      throw std::invalid_argument("matrix is not square");
    }
    for (long v : row) {
      entries_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<Integer> e(n * n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = 1;
  }
  return IntMatrix(n, std::move(e));
}

IntMatrix IntMatrix::operator*(IntMatrix const& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(n_) +
                                "x" + std::to_string(n_) + " times " +
                                std::to_string(rhs.n_) + "x" +
                                std::to_string(rhs.n_));
  }
  std::vector<Integer> out(n_ * n_);
  Integer acc;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        mpz_addmul(acc.get_mpz_t(), entries_[i * n_ + k].get_mpz_t(),
                   rhs.entries_[k * n_ + j].get_mpz_t());
      }
      out[i * n_ + j] = acc;
    }
  }
  return IntMatrix(n_, std::move(out));
}

bool IntMatrix::operator==(IntMatrix const& rhs) const noexcept {
  return n_ == rhs.n_ && entries_ == rhs.entries_;
}

bool IntMatrix::operator<(IntMatrix const& rhs) const noexcept {
  if (n_ != rhs.n_) {
    return n_ < rhs.n_;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int c = cmp(entries_[i], rhs.entries_[i]);
    if (c != 0) {
      return c < 0;
    }
  }
  return false;
}

// Fraction-free (Bareiss) elimination; every intermediate division is exact.
Integer IntMatrix::determinant() const {
  if (n_ == 1) {
    return entries_[0];
  }
  if (n_ == 2) {
    return entries_[0] * entries_[3] - entries_[1] * entries_[2];
  }
  std::vector<Integer> a = entries_;
  auto el = [&](std::size_t i, std::size_t j) -> Integer& {
    return a[i * n_ + j];
  };
  Integer prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (el(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n_ && el(swap_row, k) == 0) {
        ++swap_row;
      }
      if (swap_row == n_) {
        return 0;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(el(k, j), el(swap_row, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        Integer t = el(i, j) * el(k, k) - el(i, k) * el(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
        el(i, j) = std::move(t);
      }
    }
    prev_pivot = el(k, k);
  }
  Integer det = el(n_ - 1, n_ - 1);
  return sign < 0 ? Integer(-det) : det;
}

bool IntMatrix::is_unimodular() const {
  Integer d = determinant();
  return d == 1 || d == -1;
}

bool IntMatrix::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (entries_[i * n_ + j] != (i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  if (n_ == 2) {
    Integer det = determinant();
    if (det != 1 && det != -1) {
      throw NotUnimodular();
    }
    // adj / det, and dividing by +-1 is multiplying by it
    return IntMatrix(2, {det * entries_[3], -det * entries_[1],
                         -det * entries_[2], det * entries_[0]});
  }
  // Gauss-Jordan over the rationals on [M | I]; the unimodularity check
  // guarantees an integral result.
  if (!is_unimodular()) {
    throw NotUnimodular();
  }
  std::size_t const w = 2 * n_;
  std::vector<mpq_class> aug(n_ * w);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      aug[i * w + j] = entries_[i * n_ + j];
    }
    aug[i * w + n_ + i] = 1;
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (aug[pivot * w + col] == 0) {
      ++pivot;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < w; ++j) {
        std::swap(aug[pivot * w + j], aug[col * w + j]);
      }
    }
    mpq_class inv = 1 / aug[col * w + col];
    for (std::size_t j = 0; j < w; ++j) {
      aug[col * w + j] *= inv;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || aug[i * w + col] == 0) {
        continue;
      }
      mpq_class f = aug[i * w + col];
      for (std::size_t j = 0; j < w; ++j) {
        aug[i * w + j] -= f * aug[col * w + j];
      }
    }
  }
  std::vector<Integer> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      mpq_class const& q = aug[i * w + n_ + j];
      out[i * n_ + j] = q.get_num();
    }
  }
  return IntMatrix(n_, std::move(out));
}

Integer IntMatrix::max_abs_entry() const {
  Integer best = 0;
  for (auto const& e : entries_) {
    if (cmp_abs(e, best) > 0) {
      best = abs(e);
    }
  }
  return best;
}

std::size_t IntMatrix::hash() const noexcept {
  std::size_t h = n_;
  for (auto const& e : entries_) {
    mpz_srcptr z = e.get_mpz_t();
    std::size_t limbs = mpz_size(z);
    std::size_t eh = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b9u;
    for (std::size_t i = 0; i < limbs; ++i) {
      eh ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ull +
            (eh << 6) + (eh >> 2);
    }
    h ^= eh + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

IntMatrix multiply(IntMatrix const& a, IntMatrix const& b) { return a * b; }

Integer determinant(IntMatrix const& m) { return m.determinant(); }

IntMatrix inverse_unimodular(IntMatrix const& m) {
  return m.inverse_unimodular();
}

bool is_unimodular(IntMatrix const& m) { return m.is_unimodular(); }

IntMatrix product(std::vector<IntMatrix> const& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product of an empty sequence");
  }
  IntMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = acc * factors[i];
  }
  return acc;
}

std::string to_string(IntMatrix const& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << ',';
      os << '"' << m.at(i, j).get_str() << '"';
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
  return os << to_string(m);
}

}  // namespace matdecide
