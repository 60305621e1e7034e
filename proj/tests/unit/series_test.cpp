#include "twopile/series.hpp"

#include "doctest.h"
#include "reference_data.hpp"

#include <stdexcept>

using namespace twopile;
using namespace twopile::testing;

namespace {

double d(const Decimal& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("tail policy defaults follow the drift") {
  CHECK(TailPolicy::for_moves(MoveSet{-1, 1}).mode == TailMode::power);
  CHECK(TailPolicy::for_moves(MoveSet{-1, 1}).max_K == 200000);
  CHECK(TailPolicy::for_moves(MoveSet{-1, 2}).mode == TailMode::geometric);
  CHECK(TailPolicy::for_moves(MoveSet{-1, 2}).max_K == 5000);
  TailPolicy bad;
  bad.tolerance = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = TailPolicy{};
  bad.max_K = 15;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sum-of-squares form against the direct sum for positive drift") {
  const MoveSet m{-1, 2};
  const auto pol = TailPolicy::for_moves(m);
  for (int n = 1; n <= 6; ++n) {
    const auto t1 = p_n_theorem1(GameSpec{m, n}, pol);
    const auto dr = p_n_direct(GameSpec{m, n}, pol);
    REQUIRE(t1.verdict == Verdict::converged);
    REQUIRE(dr.verdict == Verdict::converged);
    CHECK(t1.tail_estimate <= Decimal{pol.tolerance});
    CHECK(std::abs(d(t1.value) - d(dr.value)) <= 2 * pol.tolerance);
  }
  const auto p5 = p_n_theorem1(GameSpec{m, 5}, pol);
  CHECK(std::abs(d(p5.value) - 0.45292179047578731) < 1e-9);
}

TEST_CASE("zero drift: the direct sum converges too slowly for the default tolerance") {
  const MoveSet m{-1, 1};
  auto pol = TailPolicy::for_moves(m);
  const auto t1 = p_n_theorem1(GameSpec{m, 1}, pol);
  REQUIRE(t1.verdict == Verdict::converged);
  CHECK(std::abs(d(t1.value) - 0.3633802277) < 2e-9);

  pol.max_K = 20000;
  const auto dr = p_n_direct(GameSpec{m, 1}, pol);
  CHECK(dr.verdict == Verdict::inconclusive);
  CHECK(std::abs(d(dr.value) - d(t1.value)) < 1e-4);
}

TEST_CASE("sum-of-squares form is refused when the game may never end") {
  const MoveSet m{-2, 1};
  CHECK_THROWS_AS(p_n_theorem1(GameSpec{m, 1}, TailPolicy::for_moves(m)), std::domain_error);
  CHECK_THROWS_AS(proposition7_residual(1, 2, m, TailPolicy::for_moves(m)), std::domain_error);
  const auto dr = p_n_direct(GameSpec{m, 1}, TailPolicy::for_moves(m));
  CHECK(dr.verdict == Verdict::converged);
  CHECK(d(dr.value) > 0);
  CHECK(d(dr.value) < 0.5);
  REQUIRE(dr.no_winner.has_value());
  CHECK(d(*dr.no_winner) > 0);
}

TEST_CASE("trivial targets") {
  const MoveSet m{1, 1};
  const auto pol = TailPolicy::for_moves(m);
  const auto p = p_n_direct(GameSpec{m, 5}, pol);
  REQUIRE(p.exact_value.has_value());
  CHECK(*p.exact_value == 0);
  CHECK(p_n_theorem1(GameSpec{m, 0}, pol).value == 0);
  CHECK(*p_n_theorem1(GameSpec{m, 5}, pol).exact_value == 0);
}

TEST_CASE("asymmetric targets") {
  const MoveSet m{-1, 1};
  const auto pol = TailPolicy::for_moves(m);
  const auto cells = table_p_minus1_plus1();
  CurveCache cache{m};
  for (auto [n1, n2] : {std::pair{1, 2}, std::pair{4, 1}, std::pair{3, 2}}) {
    const auto r = p_asymmetric(n1, n2, pol, cache);
    REQUIRE(r.verdict == Verdict::converged);
    const auto expected = cells[static_cast<std::size_t>(n1 - 1)][static_cast<std::size_t>(n2 - 1)];
    CHECK(std::abs(d(r.value - expected.to_decimal())) < 1e-8);
  }
  const auto diag = p_asymmetric(2, 2, pol, cache);
  CHECK(std::abs(d(diag.value) - 0.4535209109) < 1e-9);

  const MoveSet m2{-1, 2};
  const auto pol2 = TailPolicy::for_moves(m2);
  CHECK(std::abs(d(p_asymmetric(3, 3, m2, pol2).value - p_n_direct(GameSpec{m2, 3}, pol2).value)) < 1e-12);
  CHECK_THROWS_AS(p_asymmetric(0, 2, m2, pol2), std::invalid_argument);
}

TEST_CASE("p12 + p21 + simultaneous finish sums to one") {
  for (const MoveSet m : {MoveSet{-1, 1}, MoveSet{-1, 2}}) {
    const auto pol = TailPolicy::for_moves(m);
    CurveCache cache{m};
    for (auto [n1, n2] : {std::pair{1, 2}, std::pair{3, 5}, std::pair{1, 1}}) {
      const auto res = proposition7_residual(n1, n2, pol, cache);
      CHECK(res.verdict == Verdict::converged);
      CHECK(d(res.value) < 3 * pol.tolerance);
      // Strictly below one only when both players can finish in the same round.
      const auto p12 = p_asymmetric(n1, n2, pol, cache);
      const auto p21 = p_asymmetric(n2, n1, pol, cache);
      const auto both = simultaneous_finish(n1, n2, pol, cache);
      if (both.value > Decimal{pol.tolerance}) {
        CHECK(d(p12.value + p21.value) < 1);
      } else {
        CHECK(std::abs(d(p12.value + p21.value) - 1) < 2 * pol.tolerance);
      }
    }
  }
  const MoveSet m{-1, 1};
  CurveCache cache{m};
  const auto both = simultaneous_finish(1, 1, TailPolicy::for_moves(m), cache);
  CHECK(std::abs(d(both.value) - d(PiLinear(Rational{-1}, Rational{4}).to_decimal())) < 1e-9);
}

TEST_CASE("expected duration") {
  const auto det = expected_duration(GameSpec{MoveSet{1, 1}, 4}, TailPolicy::for_moves(MoveSet{1, 1}));
  REQUIRE(det.exact_value.has_value());
  CHECK(*det.exact_value == 4);

  for (int n = 1; n <= 3; ++n) {
    const auto heavy = expected_duration(GameSpec{MoveSet{-1, 1}, n}, TailPolicy::for_moves(MoveSet{-1, 1}));
    CHECK(heavy.verdict == Verdict::diverged);
    CHECK_FALSE(heavy.witness.empty());
  }

  const MoveSet m{-1, 2};
  const auto e = expected_duration(GameSpec{m, 3}, TailPolicy::for_moves(m));
  REQUIRE(e.verdict == Verdict::converged);
  CHECK(d(e.value) >= 3.0 / 2 - 1);
}

TEST_CASE("sums of squares for {-1,2}") {
  const MoveSet m{-1, 2};
  const auto ts = t_sequence(m, 3, TailPolicy::for_moves(m));
  REQUIRE(ts.size() == 3);
  CHECK(std::abs(d(ts[1].value) - 0.2886887304423) < 1e-9);
}

TEST_CASE("series results carry consistent metadata") {
  const MoveSet m{-1, 2};
  const auto r = p_n_theorem1(GameSpec{m, 2}, TailPolicy::for_moves(m));
  CHECK(r.method == SeriesMethod::theorem1);
  CHECK(r.truncation_K > 0);
  CHECK(r.fitted_ratio.has_value());
  CHECK(*r.fitted_ratio < 1);
  CHECK(r.approx().error_bound >= r.tail_estimate);
  CHECK(to_string(Verdict::diverged) == "diverged");
  CHECK(to_string(SeriesMethod::within_k) == "within_k");
}
