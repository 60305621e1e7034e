#pragma once

// Published reference values for the {-1,1} and {-1,2} games.

#include "twopile/numeric.hpp"

#include <array>

namespace twopile::testing {

inline PiLinear pl(long c0, long c1_num, long c1_den = 1) {
  return PiLinear{Rational{c0}, make_rational(c1_num, c1_den)};
}

/// sum_k r(n,k)^2 for {-1,1}, n = 1..6.
inline std::array<PiLinear, 6> t_values_minus1_plus1() {
  return {pl(-1, 4), pl(-5, 16), pl(-25, 236, 3), pl(-129, 1216, 3), pl(-681, 32092, 15),
          pl(-3653, 172144, 15)};
}

/// Printed decimals of p_1..p_6 for {-1,1}.
inline constexpr std::array<const char*, 6> kPnDecimalsMinus1Plus1 = {
    "0.3633802277", "0.4535209109", "0.4798111434", "0.4891964033", "0.4933044576", "0.4954322531"};

struct Minus1Plus2Row {
  int n;
  const char* t_value;
  const char* p_value;
};

inline constexpr std::array<Minus1Plus2Row, 8> kMinus1Plus2Table = {{
    {1, "0.3221721826105", "0.33891390869471156"},
    {2, "0.2886887304423", "0.35565563477884626"},
    {3, "0.1547549217692", "0.42262253911538507"},
    {4, "0.1241072133089", "0.43794639334553199"},
    {5, "0.0941564190484", "0.45292179047578731"},
    {10, "0.047917368748", "0.47604131562562199"},
    {20, "0.028469734522", "0.48576513273891113"},
    {100, "0.010952807500", "0.49452359624969611"},
}};

/// p_{n1,n2} for {-1,1}: row n1, column n2, both 1..5.
inline std::array<std::array<PiLinear, 5>, 5> table_p_minus1_plus1() {
  return {{
      {pl(1, -2), pl(-1, 4), pl(-3, 10), pl(1, -8, 3), pl(5, -46, 3)},
      {pl(2, -4), pl(3, -8), pl(-6, 20), pl(-15, 48), pl(10, -92, 3)},
      {pl(1, -2, 3), pl(7, -20), pl(13, -118, 3), pl(-31, 296, 3), pl(-75, 710, 3)},
      {pl(0, 8, 3), pl(-1, 16, 3), pl(32, -296, 3), pl(65, -608, 3), pl(-160, 504)},
      {pl(1, -2, 5), pl(-9, 92, 3), pl(-19, 926, 15), pl(161, -504), pl(341, -16046, 15)},
  }};
}

}  // namespace twopile::testing
