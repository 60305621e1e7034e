#pragma once

// Exact and high-precision number types shared by every module.
//
// Integer and Rational are GMP values; Rational is always kept canonical
// (positive denominator, lowest terms). Decimal is a fixed 120-digit MPFR
// float used wherever a value has to leave the exact world.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace twopile {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr unsigned kDecimalDigits = 120;
using Decimal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kDecimalDigits>,
    boost::multiprecision::et_off>;

/// Largest number of significant digits pilinear_eval will hand out; the
/// remaining precision is kept as guard digits.
inline constexpr int kMaxEvalDigits = 60;

/// c / 2^k in lowest terms.
Rational rational_pow2_scale(const Integer& c, unsigned long k);

Rational make_rational(long num, long den = 1);

/// "num/den", always with an explicit denominator ("1/1" for one).
std::string to_string(const Rational& x);

/// Accepts "num/den" or a bare integer; blanks are ignored. Throws
/// std::invalid_argument.
Rational parse_rational(std::string_view text);

Decimal to_decimal(const Rational& x);

/// pi with all kDecimalDigits digits, from MPFR.
const Decimal& pi_decimal();

/// A value together with an absolute bound on its error.
struct ApproxValue {
  Decimal value;
  Decimal error_bound;  // >= 0

  /// Prints only the decimal places the error bound guarantees.
  std::string to_string() const;
  double to_double() const { return value.convert_to<double>(); }
};

/// Largest d with error_bound <= 10^-d / 2, clamped to [0, kMaxEvalDigits].
int guaranteed_decimals(const Decimal& error_bound);

/// Fixed-point rendering with exactly `decimals` places after the point.
std::string format_fixed(const Decimal& x, int decimals);

/// c0 + c1/pi with rational coefficients.
class PiLinear {
 public:
  PiLinear() = default;
  PiLinear(Rational constant, Rational inv_pi)
      : const_(std::move(constant)), inv_pi_(std::move(inv_pi)) {}

  const Rational& const_part() const { return const_; }
  const Rational& invpi_part() const { return inv_pi_; }

  PiLinear& operator+=(const PiLinear& o);
  PiLinear& operator-=(const PiLinear& o);
  PiLinear& operator*=(const Rational& s);

  friend PiLinear operator+(PiLinear a, const PiLinear& b) { return a += b; }
  friend PiLinear operator-(PiLinear a, const PiLinear& b) { return a -= b; }
  friend PiLinear operator*(PiLinear a, const Rational& s) { return a *= s; }
  friend PiLinear operator*(const Rational& s, PiLinear a) { return a *= s; }
  friend bool operator==(const PiLinear& a, const PiLinear& b) {
    return a.const_ == b.const_ && a.inv_pi_ == b.inv_pi_;
  }

  bool is_zero() const { return const_ == 0 && inv_pi_ == 0; }

  /// Full-precision value, no rounding.
  Decimal to_decimal() const;

  /// Human form, constant first: "-5 + 16/pi", "-25 + (236/3)/pi".
  std::string to_string() const;

 private:
  Rational const_{0};
  Rational inv_pi_{0};
};

/// Rounds c0 + c1/pi to `digits` significant digits (1..kMaxEvalDigits).
/// The error bound covers the rounding plus the evaluation error.
ApproxValue pilinear_eval(const PiLinear& x, int digits);

}  // namespace twopile
