#include "tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace twopile::detail {

void TailFitter::push(double block_sum, long block_end) {
  const long start = blocks_.empty() ? 0 : blocks_.back().end;
  blocks_.push_back({std::abs(block_sum), 0.5 * static_cast<double>(start + 1 + block_end), block_end});
  while (blocks_.size() > kWindow + 1) blocks_.pop_front();
}

std::optional<TailFitter::Fit> TailFitter::fit() const {
  if (blocks_.size() < kWindow + 1) return std::nullopt;
  for (const auto& b : blocks_) {
    if (!(b.magnitude > 0) || !std::isfinite(b.magnitude)) return std::nullopt;
  }
  double ratio = 0;
  double exponent = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < blocks_.size(); ++i) {
    const double rho = blocks_[i].magnitude / blocks_[i - 1].magnitude;
    ratio = std::max(ratio, rho);
    const double span = std::log(blocks_[i].center / blocks_[i - 1].center);
    if (span > 0) exponent = std::min(exponent, -std::log(rho) / span);
  }
  // Blocks of rho^k k^-alpha terms have ratios L (c_{i-1}/c_i)^alpha that
  // creep up towards L. Solve for L from the oldest and newest ratio.
  const auto log_ratio = [&](std::size_t i) { return std::log(blocks_[i].magnitude / blocks_[i - 1].magnitude); };
  const auto log_span = [&](std::size_t i) { return std::log(blocks_[i].center / blocks_[i - 1].center); };
  const std::size_t a = 1;
  const std::size_t b = blocks_.size() - 1;
  double limit = ratio;
  const double ds = log_span(a) - log_span(b);
  if (ds > 0) {
    const double alpha = (log_ratio(b) - log_ratio(a)) / ds;
    if (alpha > 0) limit = std::max(limit, std::exp(log_ratio(b) + alpha * log_span(b)));
  }
  return Fit{ratio, limit, exponent, blocks_.back().magnitude, blocks_.back().end};
}

}  // namespace twopile::detail
