#include "twopile/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace twopile {

namespace {

// Division that must be exact by combinatorial meaning.
Integer exact_quotient(const Integer& num, const Integer& den, const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error(std::string{"inexact division in "} + what);
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace

Integer binomial(long top, long bottom) {
  if (top < 0) throw std::invalid_argument("binomial: negative upper index");
  if (bottom < 0 || bottom > top) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

Integer catalan_C(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("catalan_C: n and k must be >= 0");
  if (k == 0) return n == 1 ? 1 : 0;
  if ((n - k) % 2 == 0) return 0;
  if (n % 2 == 1) {
    const long s = (n - 1) / 2;
    const long m = k / 2;
    return exact_quotient(Integer{2 * s + 1} * binomial(2 * m, m - s), Integer{m + s + 1},
                          "catalan_C (odd n)");
  }
  const long s = n / 2;
  const long m = (k + 1) / 2;
  return exact_quotient(Integer{s} * binomial(2 * m, m - s), Integer{m}, "catalan_C (even n)");
}

// ---------------------------------------------------------------------------

RaneyTable::RaneyTable(long n_max, long k_max) : n_max_(n_max), k_max_(k_max) {
  if (n_max < -1 || k_max < 0) {
    throw std::invalid_argument("RaneyTable: need n_max >= -1 and k_max >= 0");
  }
  // Row n feeds row n+1 one column further, so row n needs
  // k_max + (n_max - n) columns.
  rows_.resize(static_cast<std::size_t>(n_max + 2));
  for (long n = -1; n <= n_max; ++n) {
    const long width = k_max + (n_max - n) + 1;
    auto& row = rows_[static_cast<std::size_t>(n + 1)];
    row.assign(static_cast<std::size_t>(width), Integer{0});
    if (n <= 0) continue;
    for (long k = 0; k < width; ++k) {
      Integer v;
      if (n == 1) {
        const long m = k / 3;
        switch (k % 3) {
          case 0:
            v = exact_quotient(binomial(3 * m, m), Integer{2 * m + 1}, "raney_D base (3m)");
            break;
          case 1:
            v = exact_quotient(binomial(3 * m + 1, m + 1), Integer{2 * m + 1},
                               "raney_D base (3m+1)");
            break;
          default:
            v = 0;
        }
      } else {
        v = rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k + 1)];
        if (n - 3 >= -1) v -= rows_[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k)];
        if (v < 0) throw std::logic_error("raney_D recurrence produced a negative count");
      }
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
}

const Integer& RaneyTable::at(long n, long k) const {
  if (n < -1 || n > n_max_ || k < 0 || k > k_max_) {
    throw std::out_of_range("RaneyTable::at: (n,k) outside the table");
  }
  return rows_[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(k)];
}

Integer raney_D(long n, long k) {
  if (n < -1 || k < 0) throw std::invalid_argument("raney_D: need n >= -1 and k >= 0");
  return RaneyTable{n, k}.at(n, k);
}

// ---------------------------------------------------------------------------

Rational q1_closed_minus1_plus1(long k) {
  if (k < 0) throw std::invalid_argument("q1_closed_minus1_plus1: k must be >= 0");
  const long m = (k + 1) / 2;
  return rational_pow2_scale(binomial(2 * m, m), static_cast<unsigned long>(2 * m));
}

Rational win_within_closed(long k) {
  if (k < 1) throw std::invalid_argument("win_within_closed: k must be >= 1");
  const long L = (k + 1) / 2;
  const Integer c = binomial(2 * L, L);
  return Rational{1} - rational_pow2_scale(Integer{2 * L + 1} * c * c, static_cast<unsigned long>(4 * L));
}

}  // namespace twopile
