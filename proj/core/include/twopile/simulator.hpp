#pragma once

// Monte Carlo play of the full two-player game.
//
// Each round A draws a step and wins on reaching n1; only then does B draw
// and win on reaching n2. Games still running after max_moves_per_game
// rounds are censored and credited to nobody.

#include "twopile/first_passage.hpp"

#include <cstdint>
#include <optional>

namespace twopile {

struct SimConfig {
  MoveSet moves{-1, 1};
  int n1 = 1;
  int n2 = 1;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t max_moves_per_game = 0;  // 0: default_horizon(moves)
  std::optional<std::uint64_t> within_k;  // also count B wins by round k
  unsigned workers = 0;                  // 0: hardware concurrency

  /// Throws std::invalid_argument on n1, n2 < 1 or trials == 0.
  void validate() const;
};

/// 10^6 rounds when a + b = 0, 10^4 otherwise.
std::uint64_t default_horizon(const MoveSet& moves);

__extension__ using WideCount = unsigned __int128;

struct SimCounts {
  std::uint64_t trials = 0;
  std::uint64_t p1_wins = 0;
  std::uint64_t p2_wins = 0;
  std::uint64_t censored = 0;
  std::uint64_t p2_wins_within = 0;
  WideCount duration_sum = 0;  // over finished games
  WideCount duration_sq_sum = 0;

  SimCounts& operator+=(const SimCounts& o);
  friend bool operator==(const SimCounts&, const SimCounts&) = default;
};

struct SimReport {
  SimConfig config;
  std::uint64_t horizon = 0;
  SimCounts counts;

  double p1_win_rate = 0;
  double p2_win_rate = 0;
  double censored_rate = 0;
  double mean_duration_uncensored = 0;  // NaN when every game was censored
  std::optional<double> p2_within_rate;

  double p1_win_se = 0;
  double p2_win_se = 0;
  double censored_se = 0;
  double mean_duration_se = 0;
  std::optional<double> p2_within_se;
};

SimReport run_simulation(const SimConfig& cfg);

/// The per-trial generator: splitmix64 keyed on (seed, trial index).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next();
  /// One fair coin, drawn from buffered 64-bit words.
  bool coin();

 private:
  std::uint64_t state_;
  std::uint64_t bits_ = 0;
  int left_ = 0;
};

}  // namespace twopile
