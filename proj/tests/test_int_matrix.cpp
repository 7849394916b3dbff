#include <catch2/catch_amalgamated.hpp>

#include "matdecide/int_matrix.hpp"
#include "test_support.hpp"

using namespace matdecide;
using namespace matdecide::testing;

TEST_CASE("multiply", "[int_matrix]") {
  CHECK(I2 * A == A);
  CHECK(A * I2 == A);
  CHECK(A * B == IntMatrix{{5, 2}, {2, 1}});
  CHECK(A * A == IntMatrix{{1, 4}, {0, 1}});
  CHECK_THROWS_AS(A * IntMatrix::identity(3), std::invalid_argument);
}

TEST_CASE("determinant", "[int_matrix]") {
  CHECK(IntMatrix::identity(1).determinant() == 1);
  CHECK(IntMatrix::identity(5).determinant() == 1);
  CHECK(A.determinant() == 1);
  CHECK(IntMatrix{{2, 0}, {0, 1}}.determinant() == 2);
  CHECK(IntMatrix{{2, 3, 1}, {1, 2, 1}, {1, 1, 1}}.determinant() == 1);
  // pivot swap: leading zero
  CHECK(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}.determinant() == -1);
  CHECK(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}.determinant() == 0);
}

TEST_CASE("inverse_unimodular", "[int_matrix]") {
  CHECK(IntMatrix::identity(3).inverse_unimodular() == IntMatrix::identity(3));
  CHECK(A.inverse_unimodular() == IntMatrix{{1, -2}, {0, 1}});
  CHECK(J.inverse_unimodular() == J);
  CHECK_THROWS_AS(IntMatrix({{2, 0}, {0, 1}}).inverse_unimodular(),
                  NotUnimodular);
  CHECK_THROWS_WITH(IntMatrix({{2, 0}, {0, 1}}).inverse_unimodular(),
                    "not invertible over the integers");
  CHECK_THROWS_AS(
      IntMatrix({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}).inverse_unimodular(),
      NotUnimodular);
  IntMatrix m3{{2, 3, 1}, {1, 2, 1}, {1, 1, 1}};
  CHECK(m3 * m3.inverse_unimodular() == IntMatrix::identity(3));
}

TEST_CASE("identity and is_unimodular", "[int_matrix]") {
  CHECK(IntMatrix::identity(2) == IntMatrix{{1, 0}, {0, 1}});
  CHECK(IntMatrix::identity(1) == IntMatrix{{1}});
  CHECK(IntMatrix::identity(4).is_identity());
  CHECK(IntMatrix::identity(4).dim() == 4);
  CHECK(A.is_unimodular());
  CHECK_FALSE(IntMatrix({{1, 0}, {0, 0}}).is_unimodular());
  CHECK(IntMatrix({{3, 1}, {5, 2}}).is_unimodular());
  CHECK(J.is_unimodular());
}

TEST_CASE("construction rejects non-square input", "[int_matrix]") {
  CHECK_THROWS_AS(IntMatrix(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(IntMatrix(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("text form", "[int_matrix]") {
  CHECK(to_string(A) == R"([["1","2"],["0","1"]])");
  CHECK(to_string(IntMatrix{{-7}}) == R"([["-7"]])");
}

TEST_CASE("algebraic properties on random input", "[int_matrix][property]") {
  Rng rng(0xA11CE);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = uniform(rng, 1, 4);
    IntMatrix a = random_matrix(rng, n, -5, 5);
    IntMatrix b = random_matrix(rng, n, -5, 5);
    IntMatrix c = random_matrix(rng, n, -5, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).determinant() == a.determinant() * b.determinant());

    IntMatrix u = random_unimodular(rng, n, 12);
    REQUIRE(u.is_unimodular());
    CHECK(u * u.inverse_unimodular() == IntMatrix::identity(n));
    CHECK(u.inverse_unimodular() * u == IntMatrix::identity(n));
  }
}

TEST_CASE("long products stay exact", "[int_matrix][property]") {
  // 50 factors with entries in [-3, 3] overflow 64 bits; compare the exact
  // product against an independent evaluation modulo a large prime.
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<IntMatrix> fs;
    for (int i = 0; i < 50; ++i) fs.push_back(random_matrix(rng, 3, -3, 3));
    IntMatrix p = product(fs);

    constexpr std::int64_t mod = 1'000'000'007;
    std::vector<std::int64_t> r{1, 0, 0, 0, 1, 0, 0, 0, 1};
    for (auto const& f : fs) {
      std::vector<std::int64_t> nr(9, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            std::int64_t x = (f.at(k, j).get_si() % mod + mod) % mod;
            nr[i * 3 + j] = (nr[i * 3 + j] + r[i * 3 + k] * x) % mod;
          }
      r = nr;
    }
    bool wide = false;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Integer m;
        mpz_fdiv_r_ui(m.get_mpz_t(), p.at(i, j).get_mpz_t(), mod);
        CHECK(m.get_si() == r[i * 3 + j]);
        wide = wide || !p.at(i, j).fits_slong_p();
      }
    }
    CHECK(wide);
  }
}

TEST_CASE("ordering and hashing agree with equality", "[int_matrix]") {
  IntMatrix x{{1, 2}, {3, 4}};
  IntMatrix y{{1, 2}, {3, 4}};
  CHECK(x == y);
  CHECK(std::hash<IntMatrix>{}(x) == std::hash<IntMatrix>{}(y));
  CHECK_FALSE(x < y);
  CHECK(IntMatrix({{1}}) < x);
  CHECK((A < B) == !(B < A));
}
