#pragma once

// Linear recurrences with degree-1 polynomial coefficients,
//   sum_{i=0..N} (a_i n + b_i) T(n+i) = 0,
// checked exactly on rational or pi-linear data and guessed from rational
// sequences by an exact null-space computation.

#include "twopile/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twopile {

class LinearRecurrence {
 public:
  struct Coefficient {
    Rational slope;   // a_i
    Rational offset;  // b_i
    friend bool operator==(const Coefficient&, const Coefficient&) = default;
  };

  /// coefficients[i] multiplies T(n+i). Normalizes: integer coefficients
  /// with content 1, trailing zero pairs dropped, and the leading pair's
  /// first nonzero entry positive. Throws if every pair is zero.
  explicit LinearRecurrence(std::vector<Coefficient> coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coefficient>& coefficients() const { return coeffs_; }

  /// (a_i n + b_i) at a given n.
  Rational weight(int i, long n) const;

  /// e.g. "(n+3)*T(n+3) - (7*n+16)*T(n+2) + (7*n+5)*T(n+1) - n*T(n) = 0"
  std::string to_string() const;

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;

 private:
  std::vector<Coefficient> coeffs_;
};

struct RecurrenceCheck {
  bool holds;
  std::optional<long> first_failure;  // n of the first violated instance
  long instances_checked;
};

/// seq[j] holds T(n_start + j). Every n with all of T(n..n+N) available is
/// checked; pi-linear values must cancel in both coordinates. Throws
/// std::invalid_argument when seq has fewer than N+1 entries.
RecurrenceCheck verify_recurrence(const LinearRecurrence& rec, const std::vector<PiLinear>& seq,
                                  long n_start);
RecurrenceCheck verify_recurrence(const LinearRecurrence& rec, const std::vector<Rational>& seq,
                                  long n_start);

inline constexpr int kGuessHoldout = 2;

/// Smallest-order recurrence (coefficient degree 0 tried before 1) fitted on
/// all but the last kGuessHoldout equations and confirmed on every term.
/// seq[j] is T(j). Requires seq.size() >= 2*(max_order+1) + 2.
std::optional<LinearRecurrence> guess_recurrence(const std::vector<Rational>& seq, int max_order);

/// Basis of the right null space of an integer matrix, computed by
/// fraction-free elimination; each vector has integer entries, content 1.
std::vector<std::vector<Integer>> integer_null_space(std::vector<std::vector<Integer>> rows,
                                                     std::size_t columns);

}  // namespace twopile
