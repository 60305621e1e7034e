#include "twopile/first_passage.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace twopile;
using twopile::testing::enumerate_r;
using twopile::testing::reference_passage;

namespace {

const std::vector<std::pair<int, int>> kMoveSets = {{-1, 1}, {-1, 2}, {1, 2}, {-2, 1},
                                                     {-2, 3}, {0, 1},  {1, 1}, {-3, 1}};

}  // namespace

TEST_CASE("move sets are unordered and validated") {
  CHECK(MoveSet(2, -1) == MoveSet(-1, 2));
  CHECK(MoveSet(2, -1).to_string() == "{-1,2}");
  CHECK(parse_moves(" 2, -1") == MoveSet(-1, 2));
  CHECK_THROWS_AS(parse_moves("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_moves("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(MoveSet(0, MoveSet::kMaxStep + 1), std::invalid_argument);
  CHECK_THROWS_AS(GameSpec(MoveSet(-1, 1), -1), std::invalid_argument);

  CHECK(MoveSet(-1, 1).finishes_almost_surely());
  CHECK(MoveSet(-1, 2).finishes_almost_surely());
  CHECK_FALSE(MoveSet(-2, 1).finishes_almost_surely());
  CHECK_FALSE(MoveSet(0, 0).finishes_almost_surely());
  CHECK(MoveSet(-1, 2).drift() == make_rational(1, 2));
}

TEST_CASE("small {-1,2} table by hand") {
  const PassageTable t = build_passage_table(GameSpec{MoveSet{-1, 2}, 1}, 4);
  CHECK(t.r(1) == make_rational(1, 2));
  CHECK(t.r(2) == make_rational(1, 4));
  CHECK(t.r(3) == 0);
  CHECK(t.r(4) == make_rational(1, 16));
  CHECK(t.q(0) == 1);
  CHECK(t.q(4) == make_rational(3, 16));
  CHECK_THROWS_AS(build_passage_table(GameSpec{MoveSet{-1, 2}, 0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_passage_table(GameSpec{MoveSet{-1, 2}, 1}, 0), std::invalid_argument);
}

TEST_CASE("dynamic program matches exhaustive enumeration") {
  for (auto [a, b] : kMoveSets) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(n);
      const auto brute = enumerate_r(a, b, n, 12);
      const PassageTable t = build_passage_table(GameSpec{MoveSet{a, b}, n}, 12);
      for (int k = 1; k <= 12; ++k) CHECK(t.r(k) == brute[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("dynamic program matches the sparse reference walk") {
  for (auto [a, b] : kMoveSets) {
    for (int n : {1, 3, 7}) {
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(n);
      const auto ref = reference_passage(a, b, n, 60);
      const PassageTable t = build_passage_table(GameSpec{MoveSet{a, b}, n}, 60);
      for (int k = 1; k <= 60; ++k) {
        CHECK(t.r(k) == ref.r[static_cast<std::size_t>(k)]);
        CHECK(t.q(k) == ref.q[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("r is the decrement of q and partial sums telescope") {
  for (auto [a, b] : kMoveSets) {
    const PassageTable t = build_passage_table(GameSpec{MoveSet{a, b}, 5}, 80);
    Rational cum = 0;
    Rational tele = 0;
    for (int k = 1; k <= 80; ++k) {
      CHECK(t.r(k) == t.q(k - 1) - t.q(k));
      cum += t.r(k);
      CHECK(t.q(k) == 1 - cum);
      tele += (t.q(k - 1) + t.q(k)) * t.r(k);
      CHECK(tele == 1 - t.q(k) * t.q(k));
    }
  }
}

TEST_CASE("reachability pattern covers every nonzero term") {
  for (auto [a, b] : kMoveSets) {
    for (int n = 1; n <= 6; ++n) {
      const GameSpec spec{MoveSet{a, b}, n};
      const auto rep = passage_gcd_reachability(spec);
      const PassageTable t = build_passage_table(spec, 90);
      for (int k = 1; k <= 90; ++k) {
        if (t.r(k) != 0) CHECK(rep.r_support.allows(k));
        if (t.q(k) != 0) CHECK(rep.q_support.allows(k));
      }
    }
  }
}

TEST_CASE("reachability is sharp for the two main games") {
  const auto rep11 = passage_gcd_reachability(GameSpec{MoveSet{-1, 1}, 2});
  for (int k = 1; k < 40; ++k) CHECK(rep11.r_support.allows(k) == (k % 2 == 0));

  const auto rep12 = passage_gcd_reachability(GameSpec{MoveSet{-1, 2}, 1});
  for (int k = 1; k < 40; ++k) CHECK(rep12.r_support.allows(k) == (k % 3 != 0));
  CHECK_FALSE(rep12.summary.empty());

  const auto det = passage_gcd_reachability(GameSpec{MoveSet{2, 2}, 5});
  CHECK(det.r_support.allows(3));
  CHECK_FALSE(det.r_support.allows(2));
  CHECK(det.r_support.exhausted_after(3));

  const auto never = passage_gcd_reachability(GameSpec{MoveSet{-2, 0}, 1});
  CHECK(never.r_support.empty());
}

TEST_CASE("double-precision continuation stays inside its error bounds") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{-1, 1}, {-1, 2}, {-2, 1}, {1, 3}}) {
    const GameSpec spec{MoveSet{a, b}, 4};
    PassageCurve curve{spec, 40};
    curve.extend_to(400);
    CHECK(curve.exact_upto() == 40);
    const PassageTable t = build_passage_table(spec, 400);
    for (int k = 1; k <= 400; ++k) {
      CAPTURE(k);
      CHECK(std::abs(curve.r(k) - t.r(k).get_d()) <= curve.r_err(k) + 1e-300);
      CHECK(std::abs(curve.q(k) - t.q(k).get_d()) <= curve.q_err(k) + 1e-300);
      if (k <= 40) CHECK(curve.r_exact(k) == t.r(k));
    }
  }
}
