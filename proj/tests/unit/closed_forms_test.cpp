#include "twopile/closed_forms.hpp"
#include "twopile/first_passage.hpp"
#include "twopile/series.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace twopile;

TEST_CASE("binomials vanish outside the triangle") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("ballot counts equal scaled first-passage probabilities") {
  for (int n = 1; n <= 9; ++n) {
    const PassageTable t = build_passage_table(GameSpec{MoveSet{-1, 1}, n}, 61);
    for (int k = 0; k <= 60; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(rational_pow2_scale(catalan_C(n, k), static_cast<unsigned long>(k + 1)) == t.r(k + 1));
    }
  }
  CHECK(catalan_C(1, 0) == 1);
  CHECK(catalan_C(2, 0) == 0);
  CHECK(catalan_C(0, 7) == 0);
  CHECK_THROWS_AS(catalan_C(-1, 3), std::invalid_argument);
}

TEST_CASE("Raney recurrence matches the {-1,2} dynamic program") {
  const RaneyTable D{7, 45};
  CHECK(D.at(1, 3) == 1);
  CHECK(D.at(1, 6) == 3);
  CHECK(D.at(1, 4) == 2);
  CHECK(D.at(1, 5) == 0);
  CHECK(D.at(0, 9) == 0);
  CHECK(D.at(-1, 9) == 0);
  for (int n = 1; n <= 7; ++n) {
    const PassageTable t = build_passage_table(GameSpec{MoveSet{-1, 2}, n}, 46);
    for (int k = 0; k <= 45; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(rational_pow2_scale(D.at(n, k), static_cast<unsigned long>(k + 1)) == t.r(k + 1));
    }
  }
  CHECK(raney_D(4, 20) == D.at(4, 20));
}

TEST_CASE("survival and win-within closed forms for the first target") {
  const PassageTable t = build_passage_table(GameSpec{MoveSet{-1, 1}, 1}, 200);
  Rational within = 0;
  for (int k = 1; k <= 200; ++k) {
    within += t.q(k) * t.r(k);
    CHECK(q1_closed_minus1_plus1(k) == t.q(k));
    CHECK(win_within_closed(k) == within);
  }
  CHECK(q1_closed_minus1_plus1(0) == 1);
}

TEST_CASE("win_within is exact and nondecreasing") {
  const GameSpec spec{MoveSet{-1, 1}, 1};
  CHECK(win_within(spec, 1) == make_rational(1, 4));
  const Rational w9 = win_within(spec, 9);
  CHECK(w9 == 1 - rational_pow2_scale(Integer{11} * binomial(10, 5) * binomial(10, 5), 20));
  Rational prev = 0;
  for (int k = 1; k <= 60; ++k) {
    const Rational w = win_within(GameSpec{MoveSet{-1, 2}, 3}, k);
    CHECK(w >= prev);
    prev = w;
  }
  CHECK_THROWS_AS(win_within(spec, 0), std::invalid_argument);
}
