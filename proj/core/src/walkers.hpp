#pragma once

// Position-window kernels behind PassageTable and PassageCurve.
//
// Both walkers keep the distribution of a single pile over the window
// [lo, lo + size) of positions strictly below the target n. With steps
// a <= b the window of step k starts at lo_{k-1} + a, so cell j of the new
// window receives cell j (move a) and cell j - (b - a) (move b) of the old
// one. Mass that moves to a position >= n is the first-passage mass r.

#include "twopile/first_passage.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace twopile::detail {

/// Integer path counts; the probability of a cell at step k is count / 2^k.
class ExactWalker {
 public:
  ExactWalker(const MoveSet& moves, int n) : a_(moves.lo()), b_(moves.hi()), n_(n) {
    cells_.emplace_back(1);
  }

  int k() const { return k_; }
  long lo() const { return lo_; }
  const std::vector<Integer>& cells() const { return cells_; }
  /// Sum of cells: number of length-k sequences that never reached n.
  const Integer& survivors() const { return survivors_; }

  /// Advances one move and returns the number of sequences that first reach
  /// the target at this move.
  Integer step() {
    const long old_size = static_cast<long>(cells_.size());
    Integer crossed = 0;
    if (old_size > 0) {
      // Old cells at positions >= n - t cross with move t.
      for (int t : {a_, b_}) {
        long first = static_cast<long>(n_) - t - lo_;
        for (long i = std::max(0L, first); i < old_size; ++i) crossed += cells_[i];
      }
    }

    const long new_lo = lo_ + a_;
    const long new_hi = std::min<long>(lo_ + old_size - 1 + b_, n_ - 1);
    const long new_size = old_size > 0 ? std::max(0L, new_hi - new_lo + 1) : 0;
    const long shift = static_cast<long>(b_) - a_;
    next_.resize(static_cast<std::size_t>(new_size));
    for (long j = 0; j < new_size; ++j) {
      Integer& out = next_[j];
      const bool has_a = j < old_size;
      const long jb = j - shift;
      const bool has_b = jb >= 0 && jb < old_size;
      if (has_a && has_b) {
        mpz_add(out.get_mpz_t(), cells_[j].get_mpz_t(), cells_[jb].get_mpz_t());
      } else if (has_a) {
        out = cells_[j];
      } else if (has_b) {
        out = cells_[jb];
      } else {
        out = 0;
      }
    }
    cells_.swap(next_);
    lo_ = new_lo;
    ++k_;
    survivors_ = 2 * survivors_ - crossed;
    return crossed;
  }

 private:
  int a_, b_, n_;
  int k_ = 0;
  long lo_ = 0;
  std::vector<Integer> cells_, next_;
  Integer survivors_ = 1;
};

/// Probabilities in double precision. Cells at the bottom of the window
/// whose mass falls below kDropThreshold are discarded and their mass is
/// accumulated in dropped(); dropped mass can only lower later r and q, so
/// it enters the error bounds as an absolute term.
class FloatWalker {
 public:
  static constexpr double kDropThreshold = 1e-30;

  FloatWalker(const MoveSet& moves, int n, int k, long lo, std::vector<double> cells)
      : a_(moves.lo()), b_(moves.hi()), n_(n), k_(k), lo_(lo), cells_(std::move(cells)) {
    trim();
  }

  int k() const { return k_; }
  long window() const { return static_cast<long>(cells_.size()); }
  double dropped() const { return dropped_; }

  struct Step {
    double r;
    double q;
  };

  Step step() {
    const long old_size = static_cast<long>(cells_.size());
    double crossed = 0.0;
    if (old_size > 0) {
      for (int t : {a_, b_}) {
        long first = static_cast<long>(n_) - t - lo_;
        for (long i = std::max(0L, first); i < old_size; ++i) crossed += cells_[i];
      }
    }
    crossed *= 0.5;

    const long new_lo = lo_ + a_;
    const long new_hi = std::min<long>(lo_ + old_size - 1 + b_, n_ - 1);
    const long new_size = old_size > 0 ? std::max(0L, new_hi - new_lo + 1) : 0;
    const long shift = static_cast<long>(b_) - a_;
    next_.assign(static_cast<std::size_t>(new_size), 0.0);
    double* out = next_.data();
    const double* in = cells_.data();
    // Move a: cell j <- old j.
    const long na = std::min(new_size, old_size);
    for (long j = 0; j < na; ++j) out[j] = 0.5 * in[j];
    // Move b: cell j <- old j - shift.
    const long jb_end = std::min(new_size, old_size + shift);
    for (long j = std::max(0L, shift); j < jb_end; ++j) out[j] += 0.5 * in[j - shift];

    double survive = 0.0;
    for (long j = 0; j < new_size; ++j) survive += out[j];

    cells_.swap(next_);
    lo_ = new_lo;
    ++k_;
    trim();
    return {crossed, survive};
  }

 private:
  void trim() {
    std::size_t cut = 0;
    while (cut < cells_.size() && cells_[cut] < kDropThreshold) dropped_ += cells_[cut++];
    if (cut > 0) {
      cells_.erase(cells_.begin(), cells_.begin() + static_cast<long>(cut));
      lo_ += static_cast<long>(cut);
    }
  }

  int a_, b_, n_;
  int k_;
  long lo_;
  std::vector<double> cells_, next_;
  double dropped_ = 0.0;
};

/// count / 2^k as a double without overflowing for large k.
inline double scaled_to_double(const Integer& count, int k) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, count.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp) - k);
}

}  // namespace twopile::detail
