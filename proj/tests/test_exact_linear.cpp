#include "springer/character.hpp"
#include "springer/exact_linear.hpp"

#include <doctest.h>

#include <random>

using namespace springer;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(to_string(Rational(2, 3)) == "2/3");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational(" -7/21 ") == Rational(-1, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("rational arithmetic is a field on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    // lowest terms, positive denominator
    const Rational s = a * b + c;
    CHECK(boost::multiprecision::denominator(s) > 0);
    CHECK(gcd(boost::multiprecision::numerator(s), boost::multiprecision::denominator(s)) == 1);
  }
}

TEST_CASE("mat_mul") {
  const RationalMatrix m{{1, 2}, {3, 4}};
  CHECK(mat_mul(RationalMatrix::identity(2), m) == m);
  CHECK(mat_mul(RationalMatrix{{2, -1}, {-3, 2}}, RationalMatrix{{2, 1}, {3, 2}}) == RationalMatrix::identity(2));

  const std::vector<Rational> d{Rational(1, 3), Rational(1)};
  CHECK(mat_mul(RationalMatrix::diagonal(d), RationalMatrix{{6, -3}, {-3, 2}}) == RationalMatrix{{2, -1}, {-3, 2}});

  CHECK_THROWS_AS(mat_mul(RationalMatrix(2), RationalMatrix(3)), InvalidArgument);
}

TEST_CASE("mat_inverse") {
  CHECK(mat_inverse(RationalMatrix{{6, -3}, {-3, 2}}) == RationalMatrix{{Rational(2, 3), 1}, {1, 2}});
  CHECK(mat_inverse(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
  CHECK(mat_inverse(RationalMatrix{{2, -1}, {-1, 2}}) ==
        RationalMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}});
  CHECK_THROWS_AS(mat_inverse(RationalMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
  CHECK_THROWS_AS(mat_inverse(RationalMatrix(3)), SingularMatrixError);
  // needs a row swap
  CHECK(mat_inverse(RationalMatrix{{0, 1}, {1, 0}}) == RationalMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("inverse is exact and solve agrees with inverse-then-multiply on random matrices") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RationalMatrix m = random_matrix(rng, n);
    if (determinant(m) == 0) {
      CHECK_THROWS_AS(mat_inverse(m), SingularMatrixError);
      continue;
    }
    const RationalMatrix inv = mat_inverse(m);
    CHECK(mat_mul(m, inv) == RationalMatrix::identity(n));
    CHECK(mat_mul(inv, m) == RationalMatrix::identity(n));

    std::vector<Rational> rhs(n);
    for (auto& r : rhs) r = random_rational(rng);
    CHECK(solve(m, rhs) == mat_vec(inv, rhs));
    CHECK(mat_vec(m, solve(m, rhs)) == rhs);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("solve") {
  CHECK(solve(RationalMatrix::identity(3), std::vector<Rational>{1, 2, 3}) == std::vector<Rational>{1, 2, 3});
  CHECK(solve(RationalMatrix{{2, 0}, {0, 2}}, std::vector<Rational>{1, 1}) ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(solve(RationalMatrix{{1, 1}, {1, 1}}, std::vector<Rational>{1, 2}), SingularMatrixError);
  CHECK_THROWS_AS(solve(RationalMatrix::identity(2), std::vector<Rational>{1}), InvalidArgument);
}

TEST_CASE("solve over character combinations matches the inverse applied termwise") {
  // S(G2, lambda) with x = 1: (1/2)[[6,-3],[-3,2]].
  const RationalMatrix s = RationalMatrix{{6, -3}, {-3, 2}}.scaled(Rational(1, 2));
  const std::vector<CharacterCombo> rhs{
      CharacterCombo({{Weight{1, 0}, 1}, {Weight{-1, 0}, -1}, {Weight{2, -1}, 3}}),
      CharacterCombo({{Weight{0, 1}, Rational(1, 2)}, {Weight{-1, 0}, 2}})};
  const auto x = solve(s, rhs);
  const RationalMatrix inv = mat_inverse(s);
  for (std::size_t i = 0; i < 2; ++i) {
    CharacterCombo expected = inv(i, 0) * rhs[0] + inv(i, 1) * rhs[1];
    CHECK(x[i] == expected);
  }
}

TEST_CASE("is_positive_definite") {
  CHECK(is_positive_definite(RationalMatrix::identity(3)));
  CHECK(is_positive_definite(RationalMatrix{{2, -1}, {-1, 2}}));
  CHECK_FALSE(is_positive_definite(RationalMatrix{{0, 0}, {0, 0}}));
  CHECK_FALSE(is_positive_definite(RationalMatrix{{1, 2}, {2, 1}}));
  CHECK_FALSE(is_positive_definite(RationalMatrix{{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(is_positive_definite(RationalMatrix{{1, 2}, {0, 1}}), InvalidArgument);
}

TEST_CASE("determinant") {
  CHECK(determinant(RationalMatrix{{2, -1}, {-3, 2}}) == 1);
  CHECK(determinant(RationalMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(RationalMatrix{{1, 2}, {2, 4}}) == 0);
}
