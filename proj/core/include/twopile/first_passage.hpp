#pragma once

// First-passage engine for one player's pile.
//
// A player adds `a` or `b` chips per move with probability 1/2 each. For a
// target n >= 1 the engine computes
//   r(n,k) = P(pile first reaches >= n at move k)
//   q(n,k) = P(pile stays < n through move k),  q(n,0) = 1
// by a dynamic program over the pile size, restricted to positions < n.

#include "twopile/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace twopile {

enum class DriftSign { negative, zero, positive };

/// The two equally likely increments. Order-insensitive: lo() <= hi().
class MoveSet {
 public:
  static constexpr int kMaxStep = 1'000'000;

  MoveSet(int a, int b);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  /// a + b, twice the drift.
  long sum() const { return long{lo_} + hi_; }
  Rational drift() const { return make_rational(sum(), 2); }
  DriftSign drift_sign() const {
    return sum() < 0 ? DriftSign::negative : sum() == 0 ? DriftSign::zero : DriftSign::positive;
  }
  bool deterministic() const { return lo_ == hi_; }
  /// True when lim_k q(n,k) = 0 for every n >= 1: a+b > 0, or a = -b != 0.
  bool finishes_almost_surely() const;

  std::string to_string() const;  // "{-1,2}"

  friend bool operator==(const MoveSet&, const MoveSet&) = default;

 private:
  int lo_;
  int hi_;
};

/// Parses "a,b" (whitespace tolerated). Throws std::invalid_argument.
MoveSet parse_moves(const std::string& text);

struct GameSpec {
  MoveSet moves;
  int n;  // target chip count

  GameSpec(MoveSet m, int target);
};

/// Which move indices k can carry a nonzero term: k >= first_k,
/// k <= last_k (when bounded) and k mod modulus in the residue set.
class SupportPattern {
 public:
  SupportPattern() = default;  // every k >= 0
  SupportPattern(int modulus, std::vector<bool> residues, long first_k,
                 std::optional<long> last_k);

  static SupportPattern none();

  int modulus() const { return modulus_; }
  const std::vector<bool>& residues() const { return residues_; }
  long first_k() const { return first_k_; }
  const std::optional<long>& last_k() const { return last_k_; }

  bool allows(long k) const;
  /// No allowed k at all.
  bool empty() const;
  /// No allowed k strictly greater than K.
  bool exhausted_after(long K) const;

  /// Support of a product of two sequences.
  SupportPattern intersect(const SupportPattern& o) const;
  /// Support of a sum of two sequences.
  SupportPattern unite(const SupportPattern& o) const;

  std::string describe() const;

 private:
  int modulus_ = 1;
  std::vector<bool> residues_{true};
  long first_k_ = 0;
  std::optional<long> last_k_;
};

struct ReachabilityReport {
  SupportPattern r_support;  // where r(n,k) may be nonzero
  SupportPattern q_support;  // where q(n,k) may be nonzero
  std::string summary;
};

/// Congruence structure of the nonzero r(n,k): every position after k moves
/// is congruent to b*k modulo (b - a), and a first passage lands in
/// [n, n + b - 1]. Necessary conditions only.
ReachabilityReport passage_gcd_reachability(const GameSpec& spec);

/// Exact r(n,k), q(n,k) for k = 0..K.
class PassageTable {
 public:
  PassageTable(GameSpec spec, std::vector<Rational> r, std::vector<Rational> q);

  const GameSpec& spec() const { return spec_; }
  int K() const { return static_cast<int>(q_.size()) - 1; }
  /// k in [1, K]
  const Rational& r(int k) const;
  /// k in [0, K]
  const Rational& q(int k) const;

 private:
  GameSpec spec_;
  std::vector<Rational> r_;  // r_[0] unused, zero
  std::vector<Rational> q_;
};

/// Throws std::invalid_argument for n = 0 or K < 1.
PassageTable build_passage_table(const GameSpec& spec, int K);

inline constexpr int kDefaultExactLimit = 4096;

/// r(n,k) and q(n,k) extended on demand. Steps up to `exact_limit` run on
/// exact integer path counts; later steps continue in double precision on
/// the converted distribution, with an absolute error bound per value.
/// Single-threaded; a fully extended curve can be shared read-only.
class PassageCurve {
 public:
  explicit PassageCurve(GameSpec spec, int exact_limit = kDefaultExactLimit);
  ~PassageCurve();
  PassageCurve(PassageCurve&&) noexcept;
  PassageCurve& operator=(PassageCurve&&) noexcept;

  const GameSpec& spec() const { return spec_; }
  int K() const { return static_cast<int>(q_.size()) - 1; }
  int exact_upto() const { return static_cast<int>(q_exact_.size()) - 1; }

  void extend_to(int K);

  const Rational& r_exact(int k) const;
  const Rational& q_exact(int k) const;
  double r(int k) const { return r_[k]; }
  double q(int k) const { return q_[k]; }
  double r_err(int k) const { return r_err_[k]; }
  double q_err(int k) const { return q_err_[k]; }

  const ReachabilityReport& reachability() const { return reach_; }

 private:
  struct Kernel;

  GameSpec spec_;
  int exact_limit_;
  ReachabilityReport reach_;
  std::vector<Rational> r_exact_, q_exact_;
  std::vector<double> r_, q_, r_err_, q_err_;
  std::unique_ptr<Kernel> kernel_;
};

}  // namespace twopile
