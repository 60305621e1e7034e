#include "twopile/numeric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twopile {

Rational rational_pow2_scale(const Integer& c, unsigned long k) {
  Rational x{c};
  mpq_div_2exp(x.get_mpq_t(), x.get_mpq_t(), k);  // keeps canonical form
  return x;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational x{num, den};
  x.canonicalize();
  return x;
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  auto valid = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d{den};
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  Rational x{Integer{num}, d};
  x.canonicalize();
  return x;
}

Decimal to_decimal(const Rational& x) {
  Decimal d;
  mpfr_set_q(d.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return d;
}

const Decimal& pi_decimal() {
  static const Decimal pi = [] {
    Decimal p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
  }();
  return pi;
}

int guaranteed_decimals(const Decimal& error_bound) {
  if (error_bound <= 0) return kMaxEvalDigits;
  // d places need error <= 10^-d / 2, so rounding leaves at most one unit
  // in the last place. The nudge lets a bound of exactly 10^-d / 2 qualify.
  Decimal lg = -boost::multiprecision::log10(2 * error_bound);
  double places = std::floor(lg.convert_to<double>() + 1e-12);
  return static_cast<int>(std::clamp(places, 0.0, double(kMaxEvalDigits)));
}

std::string format_fixed(const Decimal& x, int decimals) {
  std::string s = x.str(decimals, std::ios_base::fixed);
  // "-0.000" reads as a sign error; print it unsigned.
  if (!s.empty() && s[0] == '-' &&
      s.find_first_not_of("0.", 1) == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string ApproxValue::to_string() const {
  return format_fixed(value, guaranteed_decimals(error_bound));
}

PiLinear& PiLinear::operator+=(const PiLinear& o) {
  const_ += o.const_;
  inv_pi_ += o.inv_pi_;
  return *this;
}

PiLinear& PiLinear::operator-=(const PiLinear& o) {
  const_ -= o.const_;
  inv_pi_ -= o.inv_pi_;
  return *this;
}

PiLinear& PiLinear::operator*=(const Rational& s) {
  const_ *= s;
  inv_pi_ *= s;
  return *this;
}

Decimal PiLinear::to_decimal() const {
  return twopile::to_decimal(const_) + twopile::to_decimal(inv_pi_) / pi_decimal();
}

std::string PiLinear::to_string() const {
  auto coeff = [](const Rational& q) {
    std::string s = Rational{abs(q)}.get_str();
    return q.get_den() == 1 ? s : "(" + s + ")";
  };
  if (inv_pi_ == 0) return const_.get_str();
  const std::string term = coeff(inv_pi_) + "/pi";
  if (const_ == 0) return (inv_pi_ < 0 ? "-" : "") + term;
  return const_.get_str() + (inv_pi_ < 0 ? " - " : " + ") + term;
}

ApproxValue pilinear_eval(const PiLinear& x, int digits) {
  if (digits < 1 || digits > kMaxEvalDigits) {
    throw std::invalid_argument("pilinear_eval: digits must be in [1, " +
                                std::to_string(kMaxEvalDigits) + "]");
  }
  const Decimal exact = x.to_decimal();
  // Evaluation error of c0 + c1/pi at 120 digits, with generous slack.
  const Decimal scale = abs(to_decimal(x.const_part())) + abs(to_decimal(x.invpi_part())) + 1;
  const Decimal eval_err = scale * Decimal{"1e-110"};

  int exponent = 0;
  if (exact != 0) {
    exponent = static_cast<int>(
        boost::multiprecision::floor(boost::multiprecision::log10(abs(exact)))
            .convert_to<double>());
  }
  const Decimal half_ulp = boost::multiprecision::pow(Decimal{10}, exponent - digits + 1) / 2;
  const Decimal rounded{exact.str(digits - 1, std::ios_base::scientific)};
  return ApproxValue{rounded, half_ulp + eval_err};
}

}  // namespace twopile
