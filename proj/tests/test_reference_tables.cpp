#include "springer/reference_tables.hpp"

#include <doctest.h>

using namespace springer;

namespace {
Rational q(long p, long d = 1) { return Rational(p, d); }
}  // namespace

TEST_CASE("generic published forms instantiate to the expected small tables") {
  CHECK(published_inverse(LieType(Family::A, 2))->table ==
        RationalMatrix{{q(2, 3), q(1, 3)}, {q(1, 3), q(2, 3)}});
  CHECK(published_inverse(LieType(Family::A, 3))->table ==
        RationalMatrix{{q(3, 4), q(1, 2), q(1, 4)}, {q(1, 2), 1, q(1, 2)}, {q(1, 4), q(1, 2), q(3, 4)}});
  CHECK(published_inverse(LieType(Family::D, 4))->table ==
        RationalMatrix{{1, 1, q(1, 2), q(1, 2)}, {1, 2, 1, 1}, {q(1, 2), 1, 1, q(1, 2)}, {q(1, 2), 1, q(1, 2), 1}});
  CHECK(published_inverse(LieType(Family::C, 3))->table ==
        RationalMatrix{{q(1, 2), q(1, 2), q(1, 2)}, {q(1, 2), 1, 1}, {q(1, 2), 1, q(3, 2)}});
  // As printed: (1/2)[[2,2,1],[2,4,2],[1,2,2]].
  CHECK(published_inverse(LieType(Family::B, 3))->table ==
        RationalMatrix{{1, 1, q(1, 2)}, {1, 2, 1}, {q(1, 2), 1, 1}});
}

TEST_CASE("published inverses that match exactly") {
  for (const auto& type : {LieType(Family::A, 2), LieType(Family::A, 3), LieType(Family::A, 4),
                           LieType(Family::D, 4), LieType(Family::D, 6), LieType(Family::E, 6),
                           LieType(Family::E, 8), LieType(Family::C, 3), LieType(Family::C, 5),
                           LieType(Family::B, 4), LieType(Family::G, 2), LieType(Family::F, 4)}) {
    CAPTURE(type.name());
    const auto cmp = compare_with_published(build(type));
    REQUIRE(cmp.has_value());
    CHECK(cmp->literal_match());
    CHECK(cmp->computed_is_inverse);
    CHECK(cmp->consistent());
  }
}

TEST_CASE("documented misprints") {
  // E7 (2,2) printed 2/2; the inverse has 7/2.
  const auto e7 = compare_with_published(build(LieType(Family::E, 7)));
  REQUIRE(e7->mismatches.size() == 1);
  CHECK(e7->mismatches[0].i == 1);
  CHECK(e7->mismatches[0].j == 1);
  CHECK(e7->mismatches[0].computed == q(7, 2));
  CHECK(e7->mismatches[0].known_misprint);
  CHECK(e7->consistent());

  // B_n corner printed as 1; S^-1 has n/4. Only n = 4 is printed right.
  for (std::size_t n : {2u, 3u, 5u}) {
    const auto b = compare_with_published(build(LieType(Family::B, n)));
    REQUIRE(b->mismatches.size() == 1);
    CHECK(b->mismatches[0].i == n - 1);
    CHECK(b->mismatches[0].printed == 1);
    CHECK(b->mismatches[0].computed == q(static_cast<long>(n), 4));
    CHECK(b->consistent());
    CHECK_FALSE(b->literal_match());
  }

  // A_n row 2, column 3 printed 2(n-3)/(n+1).
  const auto a6 = compare_with_published(build(LieType(Family::A, 6)));
  REQUIRE(a6->mismatches.size() == 1);
  CHECK(a6->mismatches[0].printed == q(6, 7));
  CHECK(a6->mismatches[0].computed == q(8, 7));
  CHECK(a6->consistent());
}
