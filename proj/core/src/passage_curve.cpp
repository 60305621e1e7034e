#include "twopile/first_passage.hpp"

#include "walkers.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace twopile {

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;
constexpr double kTiny = std::numeric_limits<double>::min();

double exact_to_double_err(double x) { return 2 * kUnit * std::abs(x) + kTiny; }

}  // namespace

struct PassageCurve::Kernel {
  std::optional<detail::ExactWalker> exact;
  std::optional<detail::FloatWalker> fp;
  int float_start = 0;  // k at which the float walker took over
};

PassageCurve::PassageCurve(GameSpec spec, int exact_limit)
    : spec_(spec), exact_limit_(exact_limit), kernel_(std::make_unique<Kernel>()) {
  if (spec.n < 1) throw std::invalid_argument("PassageCurve: n must be >= 1");
  if (exact_limit < 0) throw std::invalid_argument("PassageCurve: exact_limit must be >= 0");
  reach_ = passage_gcd_reachability(spec);
  kernel_->exact.emplace(spec.moves, spec.n);
  r_exact_.emplace_back(0);
  q_exact_.emplace_back(1);
  r_ = {0.0};
  q_ = {1.0};
  r_err_ = {0.0};
  q_err_ = {0.0};
}

PassageCurve::~PassageCurve() = default;
PassageCurve::PassageCurve(PassageCurve&&) noexcept = default;
PassageCurve& PassageCurve::operator=(PassageCurve&&) noexcept = default;

const Rational& PassageCurve::r_exact(int k) const {
  if (k < 1 || k > exact_upto()) throw std::out_of_range("PassageCurve::r_exact: k out of range");
  return r_exact_[static_cast<std::size_t>(k)];
}

const Rational& PassageCurve::q_exact(int k) const {
  if (k < 0 || k > exact_upto()) throw std::out_of_range("PassageCurve::q_exact: k out of range");
  return q_exact_[static_cast<std::size_t>(k)];
}

void PassageCurve::extend_to(int target) {
  Kernel& kn = *kernel_;
  const auto reserve = static_cast<std::size_t>(target) + 1;
  if (reserve > q_.capacity()) {
    for (auto* v : {&r_, &q_, &r_err_, &q_err_}) v->reserve(reserve);
  }
  while (K() < target) {
    const int k = K() + 1;
    if (kn.exact && k <= exact_limit_) {
      Integer crossed = kn.exact->step();
      Rational rk = rational_pow2_scale(crossed, static_cast<unsigned long>(k));
      Rational qk = rational_pow2_scale(kn.exact->survivors(), static_cast<unsigned long>(k));
      const double rd = detail::scaled_to_double(crossed, k);
      const double qd = detail::scaled_to_double(kn.exact->survivors(), k);
      r_exact_.push_back(std::move(rk));
      q_exact_.push_back(std::move(qk));
      r_.push_back(rd);
      q_.push_back(qd);
      r_err_.push_back(exact_to_double_err(rd));
      q_err_.push_back(exact_to_double_err(qd));
      continue;
    }
    if (kn.exact) {
      // Hand the exact distribution over to the double-precision walker.
      const auto& counts = kn.exact->cells();
      std::vector<double> cells(counts.size());
      for (std::size_t i = 0; i < counts.size(); ++i) {
        cells[i] = detail::scaled_to_double(counts[i], kn.exact->k());
      }
      kn.fp.emplace(spec_.moves, spec_.n, kn.exact->k(), kn.exact->lo(), std::move(cells));
      kn.float_start = kn.exact->k();
      kn.exact.reset();
    }
    const auto st = kn.fp->step();
    // Every cell is a sum of nonnegative terms: one rounding for the
    // conversion plus one per step, plus the summations for r and q.
    const double steps = static_cast<double>(k - kn.float_start) + 4;
    const double rel_r = 1.01 * kUnit * steps;
    const double rel_q = 1.01 * kUnit * (steps + static_cast<double>(kn.fp->window()));
    r_.push_back(st.r);
    q_.push_back(st.q);
    r_err_.push_back(rel_r * st.r + kn.fp->dropped() + kTiny);
    q_err_.push_back(rel_q * st.q + kn.fp->dropped() + kTiny);
  }
}

}  // namespace twopile
