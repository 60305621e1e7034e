#include "twopile/sequence_lab.hpp"

#include "doctest.h"
#include "reference_data.hpp"

#include <stdexcept>
#include <vector>

using namespace twopile;
using C = LinearRecurrence::Coefficient;

namespace {

LinearRecurrence t_recurrence() {
  return LinearRecurrence{{C{-1, 0}, C{7, 5}, C{-7, -16}, C{1, 3}}};
}

/// Continues T(1), T(2), T(3) with the T recurrence; seq[j] = T(j+1).
std::vector<Rational> extend_t(std::vector<Rational> seq, int count) {
  for (long n = 1; static_cast<int>(seq.size()) < count; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    seq.push_back(((7 * n + 16) * seq[i + 2] - (7 * n + 5) * seq[i + 1] + n * seq[i]) / Rational{n + 3});
  }
  return seq;
}

}  // namespace

TEST_CASE("recurrences normalize and print") {
  const LinearRecurrence rec = t_recurrence();
  CHECK(rec.order() == 3);
  CHECK(rec.to_string() == "(n+3)*T(n+3) - (7*n+16)*T(n+2) + (7*n+5)*T(n+1) - n*T(n) = 0");

  const LinearRecurrence scaled{{C{2, 0}, C{-14, -10}, C{14, 32}, C{-2, -6}, C{0, 0}}};
  CHECK(scaled == rec);
  const LinearRecurrence halves{{C{make_rational(-1, 2), 0}, C{make_rational(7, 2), make_rational(5, 2)},
                                 C{make_rational(-7, 2), -8}, C{make_rational(1, 2), make_rational(3, 2)}}};
  CHECK(halves == rec);
  CHECK(LinearRecurrence{{C{0, -1}, C{0, -1}, C{0, 1}}}.to_string() == "T(n+2) - T(n+1) - T(n) = 0");
  CHECK_THROWS_AS(LinearRecurrence({C{0, 0}}), std::invalid_argument);
}

TEST_CASE("T recurrence holds exactly on the listed sums of squares") {
  const auto t = twopile::testing::t_values_minus1_plus1();
  const std::vector<PiLinear> seq(t.begin(), t.end());
  const auto check = verify_recurrence(t_recurrence(), seq, 1);
  CHECK(check.holds);
  CHECK(check.instances_checked == 3);

  std::vector<PiLinear> broken = seq;
  broken[4] += PiLinear(Rational{0}, make_rational(1, 15));
  const auto bad = verify_recurrence(t_recurrence(), broken, 1);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_failure.has_value());
  CHECK(*bad.first_failure == 2);

  CHECK_THROWS_AS(verify_recurrence(t_recurrence(), std::vector<PiLinear>(3), 1), std::invalid_argument);
}

TEST_CASE("guessing finds constant-coefficient recurrences first") {
  std::vector<Rational> fib{0, 1};
  while (fib.size() < 12) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const auto rec = guess_recurrence(fib, 3);
  REQUIRE(rec.has_value());
  CHECK(rec->to_string() == "T(n+2) - T(n+1) - T(n) = 0");
}

TEST_CASE("guessing recovers the Catalan recurrence") {
  std::vector<Rational> cat{1};
  for (long n = 0; cat.size() < 12; ++n) cat.push_back(cat.back() * (4 * n + 2) / Rational{n + 2});
  const auto rec = guess_recurrence(cat, 2);
  REQUIRE(rec.has_value());
  CHECK(rec->to_string() == "(n+2)*T(n+1) - (4*n+2)*T(n) = 0");
}

TEST_CASE("guessing recovers the T recurrence from either coordinate") {
  const auto t = twopile::testing::t_values_minus1_plus1();
  std::vector<Rational> invpi;
  std::vector<Rational> constant;
  for (int i = 0; i < 3; ++i) {
    invpi.push_back(t[static_cast<std::size_t>(i)].invpi_part());
    constant.push_back(t[static_cast<std::size_t>(i)].const_part());
  }
  invpi = extend_t(invpi, 16);
  constant = extend_t(constant, 16);
  CHECK(invpi[5] == t[5].invpi_part());
  CHECK(constant[5] == t[5].const_part());

  // seq[j] = T(j+1), so the recurrence comes back shifted by one.
  const LinearRecurrence shifted{{C{-1, -1}, C{7, 12}, C{-7, -23}, C{1, 4}}};
  for (const auto& seq : {invpi, constant}) {
    const auto rec = guess_recurrence(seq, 3);
    REQUIRE(rec.has_value());
    CHECK(*rec == shifted);
  }
}

TEST_CASE("guessing reports failure and validates its input") {
  std::vector<Rational> noise;
  for (long i = 0; i < 12; ++i) noise.push_back(Rational{(i * i * i * 7919) % 101 + 1});
  CHECK_FALSE(guess_recurrence(noise, 2).has_value());
  CHECK_THROWS_AS(guess_recurrence(std::vector<Rational>(5, Rational{1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(guess_recurrence(noise, 0), std::invalid_argument);
}

TEST_CASE("integer null space") {
  // x + y - z = 0, 2x - y = 0  ->  (1, 2, 3)
  const auto basis = integer_null_space({{1, 1, -1}, {2, -1, 0}}, 3);
  REQUIRE(basis.size() == 1);
  const auto& v = basis[0];
  CHECK(v[0] * 2 == v[1]);
  CHECK(v[0] * 3 == v[2]);
  CHECK(abs(v[0]) == 1);
}
