#pragma once

#include <cstddef>
#include <deque>
#include <optional>

namespace twopile::detail {

/// Keeps the most recent block sums of a series (one block = one period of
/// its support pattern) and fits their decay.
class TailFitter {
 public:
  static constexpr std::size_t kWindow = 8;  // ratios used per fit

  struct Fit {
    double ratio;     // max |B_i / B_{i-1}|
    double limit_ratio;  // extrapolated sup of future ratios, >= ratio
    double exponent;  // min local power-law exponent
    double last;      // |B_last|
    long last_end;    // k at the end of the last block
  };

  void push(double block_sum, long block_end);
  void clear() { blocks_.clear(); }

  /// Needs kWindow + 1 nonzero blocks.
  std::optional<Fit> fit() const;

 private:
  struct Block {
    double magnitude;
    double center;
    long end;
  };
  std::deque<Block> blocks_;
};

}  // namespace twopile::detail
