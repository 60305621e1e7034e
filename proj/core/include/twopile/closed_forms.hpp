#pragma once

// Explicit counting formulas for the {-1,1} and {-1,2} games. They serve as
// oracles for the dynamic program: r(n,k) = C(n,k-1) / 2^k for {-1,1} and
// r(n,k) = D(n,k-1) / 2^k for {-1,2}.

#include "twopile/numeric.hpp"

#include <vector>

namespace twopile {

/// Binomial coefficient; zero when the lower index is negative or exceeds
/// the upper one.
Integer binomial(long top, long bottom);

/// Number of {-1,+1} sequences of length k ending at n-1 whose partial sums
/// all stay below n (ballot numbers). Throws std::invalid_argument for
/// negative arguments.
Integer catalan_C(long n, long k);

/// D(n,k) for the {-1,+2} walk: sequences of length k ending at n-1 or n-2
/// with every partial sum below n. Rows are built bottom-up from
///   D(-1,.) = D(0,.) = 0,
///   D(1,3m) = C(3m,m)/(2m+1), D(1,3m+1) = C(3m+1,m+1)/(2m+1), D(1,3m+2) = 0,
///   D(n,k) = D(n-1,k+1) - D(n-3,k).
class RaneyTable {
 public:
  /// Covers -1 <= n <= n_max, 0 <= k <= k_max.
  RaneyTable(long n_max, long k_max);

  long n_max() const { return n_max_; }
  long k_max() const { return k_max_; }
  const Integer& at(long n, long k) const;

 private:
  long n_max_;
  long k_max_;
  std::vector<std::vector<Integer>> rows_;  // rows_[n + 1]
};

/// Single value; builds a table just large enough.
Integer raney_D(long n, long k);

/// q(1,k) for {-1,1}: binom(2m,m)/4^m with m = ceil(k/2).
Rational q1_closed_minus1_plus1(long k);

/// Probability that the second player wins within k moves, {-1,1}, n = 1:
/// 1 - (2L+1)/16^L * binom(2L,L)^2 with L = floor((k+1)/2).
Rational win_within_closed(long k);

}  // namespace twopile
