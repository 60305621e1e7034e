#pragma once

// Truncated evaluation of the infinite series built from r(n,k), q(n,k):
// winning probabilities, the two-target generalisation, expected duration
// and the sums of squared first-passage probabilities.
//
// Terms up to the curve's exact limit are summed as exact rationals; later
// terms come from the double-precision kernel and their error bounds are
// accumulated into SeriesResult::error_bound. The tail beyond the
// truncation index is estimated, not bounded rigorously: by a geometric
// ratio when the drift is nonzero and by a fitted power law when it is zero.

#include "twopile/first_passage.hpp"
#include "twopile/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twopile {

enum class Verdict { converged, diverged, inconclusive };
enum class SeriesMethod { theorem1, direct, duration, within_k, asymmetric };
enum class TailMode { geometric, power };

std::string to_string(Verdict v);
std::string to_string(SeriesMethod m);
std::string to_string(TailMode m);

struct TailPolicy {
  double tolerance = 1e-9;
  int max_K = 5000;
  TailMode mode = TailMode::geometric;
  /// Never stop before this many terms (used to force longer runs).
  int min_K = 16;
  int exact_limit = kDefaultExactLimit;

  /// Defaults: power-law tails and max_K = 200,000 for zero drift,
  /// geometric tails and max_K = 5,000 otherwise.
  static TailPolicy for_moves(const MoveSet& moves, double tolerance = 1e-9);

  /// Throws std::invalid_argument unless tolerance > 0 and max_K >= 16.
  void validate() const;
};

struct SeriesResult {
  Decimal value;
  Decimal error_bound;  // rounding/kernel error of the partial sum
  int truncation_K = 0;
  Decimal last_term;  // last term on the support, at or before truncation_K
  Decimal tail_estimate;  // +inf when no estimate is available
  Verdict verdict = Verdict::inconclusive;
  SeriesMethod method = SeriesMethod::direct;

  std::optional<double> fitted_ratio;     // geometric ratio per period
  std::optional<double> fitted_exponent;  // local power-law exponent
  std::string witness;                    // why it diverged, when it did
  std::optional<Decimal> no_winner;       // q(n,K)^2 when the game may not end
  std::optional<Rational> exact_value;    // when the whole sum is exact

  /// Value with the combined error + tail as its bound.
  ApproxValue approx() const;
};

/// Curves for one move set, indexed by target, extended on demand.
class CurveCache {
 public:
  CurveCache(MoveSet moves, int exact_limit = kDefaultExactLimit)
      : moves_(moves), exact_limit_(exact_limit) {}

  const MoveSet& moves() const { return moves_; }
  int exact_limit() const { return exact_limit_; }
  PassageCurve& get(int n);

 private:
  MoveSet moves_;
  int exact_limit_;
  std::map<int, PassageCurve> curves_;
};

/// p_n = 1/2 - 1/2 * sum_k r(n,k)^2. Needs a game that ends almost surely
/// (a+b > 0, or a = -b != 0); throws std::domain_error otherwise.
SeriesResult p_n_theorem1(const GameSpec& spec, const TailPolicy& policy);
SeriesResult p_n_theorem1(const GameSpec& spec, const TailPolicy& policy, CurveCache& cache);

/// p_n = sum_k q(n,k) r(n,k). Valid for every drift; when the game may
/// go on forever, no_winner carries q(n,K)^2.
SeriesResult p_n_direct(const GameSpec& spec, const TailPolicy& policy);
SeriesResult p_n_direct(const GameSpec& spec, const TailPolicy& policy, CurveCache& cache);

/// Probability that the second player reaches n2 before the first reaches
/// n1: sum_k q(n1,k) r(n2,k). For zero drift that series converges like
/// 1/K, so it is evaluated in the equivalent form
///   1/2 + 1/2 * sum_k [q(n1,k) r(n2,k) - r(n1,k) q(n2,k-1)],
/// which uses that the first player's win probability is
/// sum_k r(n1,k) q(n2,k-1) and that the two add to one.
SeriesResult p_asymmetric(int n1, int n2, const MoveSet& moves, const TailPolicy& policy);
SeriesResult p_asymmetric(int n1, int n2, const TailPolicy& policy, CurveCache& cache);

/// sum_k r(n1,k) r(n2,k): probability both players finish in the same round.
SeriesResult simultaneous_finish(int n1, int n2, const TailPolicy& policy, CurveCache& cache);

/// |p_{n1,n2} + p_{n2,n1} + sum_k r(n1,k) r(n2,k) - 1|. Throws
/// std::domain_error when the game may not end.
SeriesResult proposition7_residual(int n1, int n2, const MoveSet& moves, const TailPolicy& policy);
SeriesResult proposition7_residual(int n1, int n2, const TailPolicy& policy, CurveCache& cache);

/// E[duration] = sum_{k>=0} q(n,k)^2; verdict diverged for heavy tails.
SeriesResult expected_duration(const GameSpec& spec, const TailPolicy& policy);

/// Exact sum_{i<=k} q(n,i) r(n,i).
Rational win_within(const GameSpec& spec, int k);

/// T_n = sum_k r(n,k)^2 for n = 1..n_max.
std::vector<SeriesResult> t_sequence(const MoveSet& moves, int n_max, const TailPolicy& policy);
SeriesResult t_value(int n, const TailPolicy& policy, CurveCache& cache);

}  // namespace twopile
