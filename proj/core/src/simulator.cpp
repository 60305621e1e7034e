#include "twopile/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace twopile {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

double rate_se(double p, std::uint64_t n) {
  return std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix64(mix64(seed) ^ (trial * kGolden + 0x632be59bd9b4e019ULL))) {}

std::uint64_t TrialRng::next() {
  state_ += kGolden;
  return mix64(state_);
}

bool TrialRng::coin() {
  if (left_ == 0) {
    bits_ = next();
    left_ = 64;
  }
  const bool out = bits_ & 1U;
  bits_ >>= 1;
  --left_;
  return out;
}

void SimConfig::validate() const {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("simulation targets must be >= 1");
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
}

std::uint64_t default_horizon(const MoveSet& moves) {
  return moves.sum() == 0 ? 1'000'000 : 10'000;
}

SimCounts& SimCounts::operator+=(const SimCounts& o) {
  trials += o.trials;
  p1_wins += o.p1_wins;
  p2_wins += o.p2_wins;
  censored += o.censored;
  p2_wins_within += o.p2_wins_within;
  duration_sum += o.duration_sum;
  duration_sq_sum += o.duration_sq_sum;
  return *this;
}

namespace {

SimCounts simulate_range(const SimConfig& cfg, std::uint64_t horizon, std::uint64_t begin,
                         std::uint64_t end) {
  const long lo = cfg.moves.lo();
  const long hi = cfg.moves.hi();
  const std::uint64_t within = cfg.within_k.value_or(0);
  SimCounts c;
  for (std::uint64_t t = begin; t < end; ++t) {
    TrialRng rng{cfg.seed, t};
    long a = 0;
    long b = 0;
    std::uint64_t round = 0;
    int winner = 0;
    while (round < horizon) {
      ++round;
      a += rng.coin() ? hi : lo;
      if (a >= cfg.n1) {
        winner = 1;
        break;
      }
      b += rng.coin() ? hi : lo;
      if (b >= cfg.n2) {
        winner = 2;
        break;
      }
    }
    ++c.trials;
    if (winner == 0) {
      ++c.censored;
      continue;
    }
    if (winner == 1) {
      ++c.p1_wins;
    } else {
      ++c.p2_wins;
      if (round <= within) ++c.p2_wins_within;
    }
    c.duration_sum += round;
    c.duration_sq_sum += static_cast<WideCount>(round) * round;
  }
  return c;
}

}  // namespace

SimReport run_simulation(const SimConfig& cfg) {
  cfg.validate();
  SimReport rep;
  rep.config = cfg;
  rep.horizon = cfg.max_moves_per_game ? cfg.max_moves_per_game : default_horizon(cfg.moves);

  unsigned workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));

  std::vector<SimCounts> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = cfg.trials / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = w + 1 == workers ? cfg.trials : begin + chunk;
    if (workers == 1) {
      parts[w] = simulate_range(cfg, rep.horizon, begin, end);
    } else {
      pool.emplace_back([&, w, begin, end] { parts[w] = simulate_range(cfg, rep.horizon, begin, end); });
    }
  }
  for (auto& t : pool) t.join();
  for (const auto& p : parts) rep.counts += p;

  const auto& c = rep.counts;
  const double N = static_cast<double>(c.trials);
  rep.p1_win_rate = static_cast<double>(c.p1_wins) / N;
  rep.p2_win_rate = static_cast<double>(c.p2_wins) / N;
  rep.censored_rate = static_cast<double>(c.censored) / N;
  rep.p1_win_se = rate_se(rep.p1_win_rate, c.trials);
  rep.p2_win_se = rate_se(rep.p2_win_rate, c.trials);
  rep.censored_se = rate_se(rep.censored_rate, c.trials);
  if (cfg.within_k) {
    rep.p2_within_rate = static_cast<double>(c.p2_wins_within) / N;
    rep.p2_within_se = rate_se(*rep.p2_within_rate, c.trials);
  }

  const std::uint64_t finished = c.p1_wins + c.p2_wins;
  if (finished == 0) {
    rep.mean_duration_uncensored = std::numeric_limits<double>::quiet_NaN();
    rep.mean_duration_se = std::numeric_limits<double>::quiet_NaN();
  } else {
    const long double F = static_cast<long double>(finished);
    const long double mean = static_cast<long double>(c.duration_sum) / F;
    rep.mean_duration_uncensored = static_cast<double>(mean);
    if (finished > 1) {
      const long double s1 = static_cast<long double>(c.duration_sum);
      const long double s2 = static_cast<long double>(c.duration_sq_sum);
      const long double var = std::max(0.0L, (s2 - s1 * s1 / F) / (F - 1));
      rep.mean_duration_se = static_cast<double>(std::sqrt(var / F));
    }
  }
  return rep;
}

}  // namespace twopile
