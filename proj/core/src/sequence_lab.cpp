#include "twopile/sequence_lab.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twopile {

namespace {

Integer lcm_of_denominators(const std::vector<LinearRecurrence::Coefficient>& cs) {
  Integer l = 1;
  for (const auto& c : cs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.slope.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.offset.get_den_mpz_t());
  }
  return l;
}

void divide_by_content(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

LinearRecurrence::LinearRecurrence(std::vector<Coefficient> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().slope == 0 && coeffs_.back().offset == 0) {
    coeffs_.pop_back();
  }
  if (coeffs_.empty()) throw std::invalid_argument("LinearRecurrence: all coefficients are zero");

  const Integer l = lcm_of_denominators(coeffs_);
  std::vector<Integer> flat;
  for (const auto& c : coeffs_) {
    flat.push_back(Rational{c.slope * l}.get_num());
    flat.push_back(Rational{c.offset * l}.get_num());
  }
  divide_by_content(flat);
  const auto& lead = coeffs_.back();
  const int sign = lead.slope != 0 ? sgn(lead.slope) : sgn(lead.offset);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i].slope = sign * flat[2 * i];
    coeffs_[i].offset = sign * flat[2 * i + 1];
  }
}

Rational LinearRecurrence::weight(int i, long n) const {
  const auto& c = coeffs_.at(static_cast<std::size_t>(i));
  return c.slope * n + c.offset;
}

std::string LinearRecurrence::to_string() const {
  // Polynomial a*n + b with its sign pulled out.
  auto poly = [](Rational a, Rational b, bool& negative) {
    negative = a < 0 || (a == 0 && b < 0);
    if (negative) {
      a = -a;
      b = -b;
    }
    std::string s;
    if (a == 0) return b.get_str();
    s = a == 1 ? "n" : a.get_str() + "*n";
    if (b == 0) return s;
    return "(" + s + (b > 0 ? "+" : "-") + Rational{abs(b)}.get_str() + ")";
  };

  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.slope == 0 && c.offset == 0) continue;
    bool negative = false;
    std::string p = poly(c.slope, c.offset, negative);
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string term = i == 0 ? "T(n)" : "T(n+" + std::to_string(i) + ")";
    if (p == "1") {
      os << term;
    } else {
      os << p << "*" << term;
    }
  }
  os << " = 0";
  return os.str();
}

namespace {

template <typename Value, typename Zero>
RecurrenceCheck check_instances(const LinearRecurrence& rec, const std::vector<Value>& seq,
                                long n_start, Zero is_zero) {
  const long N = rec.order();
  if (static_cast<long>(seq.size()) < N + 1) {
    throw std::invalid_argument("verify_recurrence: need at least order+1 sequence values");
  }
  RecurrenceCheck out{true, std::nullopt, 0};
  for (long j = 0; j + N < static_cast<long>(seq.size()); ++j) {
    const long n = n_start + j;
    Value acc{};
    for (long i = 0; i <= N; ++i) {
      acc += seq[static_cast<std::size_t>(j + i)] * rec.weight(static_cast<int>(i), n);
    }
    ++out.instances_checked;
    if (!is_zero(acc)) {
      out.holds = false;
      out.first_failure = n;
      return out;
    }
  }
  return out;
}

}  // namespace

RecurrenceCheck verify_recurrence(const LinearRecurrence& rec, const std::vector<PiLinear>& seq,
                                  long n_start) {
  return check_instances(rec, seq, n_start, [](const PiLinear& x) { return x.is_zero(); });
}

RecurrenceCheck verify_recurrence(const LinearRecurrence& rec, const std::vector<Rational>& seq,
                                  long n_start) {
  return check_instances(rec, seq, n_start, [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Integer>> integer_null_space(std::vector<std::vector<Integer>> rows,
                                                     std::size_t columns) {
  // Fraction-free row echelon form; each row is kept primitive.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Integer f = rows[i][col];
      const Integer p = rows[rank][col];
      for (std::size_t c = 0; c < columns; ++c) {
        rows[i][c] = p * rows[i][c] - f * rows[rank][c];
      }
      divide_by_content(rows[i]);
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  // Reduced form: every pivot row has a single pivot column among pivots.
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    // x_free = 1, other free vars 0; pivot x_p = -row[free] / row[p].
    std::vector<Rational> x(columns, Rational{0});
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      const auto p = pivot_cols[r];
      Rational v{rows[r][free]};
      v /= Rational{rows[r][p]};
      x[p] = -v;
    }
    Integer l = 1;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> vec(columns);
    for (std::size_t c = 0; c < columns; ++c) vec[c] = Rational{x[c] * l}.get_num();
    divide_by_content(vec);
    basis.push_back(std::move(vec));
  }
  return basis;
}

std::optional<LinearRecurrence> guess_recurrence(const std::vector<Rational>& seq, int max_order) {
  if (max_order < 1) throw std::invalid_argument("guess_recurrence: max_order must be >= 1");
  if (seq.size() < static_cast<std::size_t>(2 * (max_order + 1) + 2)) {
    throw std::invalid_argument("guess_recurrence: sequence too short for the requested order");
  }
  const long L = static_cast<long>(seq.size());

  for (int N = 1; N <= max_order; ++N) {
    for (int degree = 0; degree <= 1; ++degree) {
      const std::size_t per = static_cast<std::size_t>(degree + 1);
      const std::size_t unknowns = per * static_cast<std::size_t>(N + 1);
      const long fit_rows = L - N - kGuessHoldout;
      if (fit_rows < static_cast<long>(unknowns)) continue;

      // Row n: sum_i (a_i n + b_i) T(n+i), over a common denominator.
      std::vector<std::vector<Integer>> rows;
      for (long n = 0; n < fit_rows; ++n) {
        std::vector<Rational> row;
        for (int i = 0; i <= N; ++i) {
          const Rational& t = seq[static_cast<std::size_t>(n + i)];
          if (degree == 1) row.push_back(t * n);
          row.push_back(t);
        }
        Integer l = 1;
        for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> ints;
        for (const auto& v : row) ints.push_back(Rational{v * l}.get_num());
        rows.push_back(std::move(ints));
      }

      for (const auto& v : integer_null_space(std::move(rows), unknowns)) {
        std::vector<LinearRecurrence::Coefficient> cs;
        for (int i = 0; i <= N; ++i) {
          const std::size_t base = per * static_cast<std::size_t>(i);
          cs.push_back(degree == 1 ? LinearRecurrence::Coefficient{v[base], v[base + 1]}
                                   : LinearRecurrence::Coefficient{0, v[base]});
        }
        if (cs.back().slope == 0 && cs.back().offset == 0) continue;
        LinearRecurrence rec{std::move(cs)};
        if (rec.order() == N && verify_recurrence(rec, seq, 0).holds) return rec;
      }
    }
  }
  return std::nullopt;
}

}  // namespace twopile
