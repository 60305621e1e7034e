#include "twopile/series.hpp"

#include "tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twopile {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::theorem1: return "theorem1";
    case SeriesMethod::direct: return "direct";
    case SeriesMethod::duration: return "duration";
    case SeriesMethod::within_k: return "within_k";
    case SeriesMethod::asymmetric: return "asymmetric";
  }
  return "?";
}

std::string to_string(TailMode m) { return m == TailMode::power ? "power" : "geometric"; }

TailPolicy TailPolicy::for_moves(const MoveSet& moves, double tolerance) {
  TailPolicy p;
  p.tolerance = tolerance;
  if (moves.drift_sign() == DriftSign::zero) {
    p.mode = TailMode::power;
    p.max_K = 200'000;
  } else {
    p.mode = TailMode::geometric;
    p.max_K = 5'000;
  }
  return p;
}

void TailPolicy::validate() const {
  if (!(tolerance > 0)) throw std::invalid_argument("TailPolicy: tolerance must be > 0");
  if (max_K < 16) throw std::invalid_argument("TailPolicy: max_K must be >= 16");
  if (min_K < 0) throw std::invalid_argument("TailPolicy: min_K must be >= 0");
  if (exact_limit < 0) throw std::invalid_argument("TailPolicy: exact_limit must be >= 0");
}

ApproxValue SeriesResult::approx() const { return ApproxValue{value, error_bound + tail_estimate}; }

PassageCurve& CurveCache::get(int n) {
  auto it = curves_.find(n);
  if (it == curves_.end()) {
    it = curves_.emplace(n, PassageCurve{GameSpec{moves_, n}, exact_limit_}).first;
  }
  return it->second;
}

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;
constexpr double kDivergenceExponent = 1.05;
constexpr double kDivergenceCap = 1e6;
constexpr int kDivergenceStrikes = 3;
constexpr long kDivergenceBurnIn = 64;

/// A double with an absolute error bound.
struct Bounded {
  double v;
  double e;
};

Bounded operator*(Bounded x, Bounded y) {
  const double v = x.v * y.v;
  return {v, std::abs(x.v) * y.e + std::abs(y.v) * x.e + x.e * y.e + 2 * kUnit * std::abs(v)};
}
Bounded operator-(Bounded x, Bounded y) {
  const double v = x.v - y.v;
  return {v, x.e + y.e + kUnit * std::abs(v)};
}

Bounded r_of(const PassageCurve& c, int k) { return {c.r(k), c.r_err(k)}; }
Bounded q_of(const PassageCurve& c, int k) { return {c.q(k), c.q_err(k)}; }

struct Terms {
  long first_k = 1;
  SupportPattern support;
  std::vector<PassageCurve*> curves;
  std::function<Rational(int)> exact;
  std::function<Bounded(int)> approx;
};

/// value = offset + scale * sum_k term_k
struct Shape {
  Rational offset{0};
  Rational scale{1};
};

Decimal infinity() { return Decimal{std::numeric_limits<double>::infinity()}; }

SeriesResult run_series(const Terms& terms, const TailPolicy& policy, const Shape& shape,
                        bool allow_divergence, SeriesMethod method) {
  policy.validate();
  const double scale = std::abs(shape.scale.get_d());
  // One block spans a full period of every curve involved; q is flat on
  // the steps where r vanishes, so shorter blocks show spurious ratios of 1.
  long M = terms.support.modulus();
  for (const PassageCurve* c : terms.curves) {
    M = std::lcm(M, static_cast<long>(c->reachability().r_support.modulus()));
  }
  const long max_K = std::max<long>(policy.max_K, policy.min_K);
  const long burn_in = std::max<long>({policy.min_K, terms.support.first_k() + 9L * M, 16L});

  Rational exact_sum{0};
  Decimal approx_sum{0};
  double err_sum = 0;
  double running = 0;  // double shadow of the partial sum
  bool any_approx = false;

  detail::TailFitter fitter;
  double block = 0;
  long next_checkpoint = std::max(kDivergenceBurnIn, burn_in);
  int strikes = 0;

  SeriesResult out;
  out.method = method;
  out.tail_estimate = infinity();
  double last_term = 0;
  std::optional<detail::TailFitter::Fit> last_fit;

  auto ensure = [&](long k) {
    for (PassageCurve* c : terms.curves) {
      if (c->K() < k) {
        const long chunk = std::max<long>(256, c->K() / 8);
        c->extend_to(static_cast<int>(std::min(max_K + 1, std::max<long>(k, c->K() + chunk))));
      }
    }
  };

  long K = terms.first_k - 1;
  bool done = false;
  for (long k = terms.first_k; k <= max_K && !done; ++k) {
    double td = 0;
    if (terms.support.allows(k)) {
      ensure(k);
      if (k <= policy.exact_limit) {
        Rational t = terms.exact(static_cast<int>(k));
        td = t.get_d();
        exact_sum += t;
      } else {
        Bounded b = terms.approx(static_cast<int>(k));
        td = b.v;
        approx_sum += Decimal{b.v};
        err_sum += b.e;
        any_approx = true;
      }
    }
    K = k;
    if (terms.support.allows(k)) last_term = td;
    running += td;
    block += td;
    if (k % M != 0) continue;

    fitter.push(block, k);
    block = 0;
    if (k < burn_in) continue;

    if (terms.support.exhausted_after(k)) {
      out.tail_estimate = 0;
      out.verdict = Verdict::converged;
      break;
    }
    if (std::abs(running) > kDivergenceCap) {
      out.verdict = Verdict::diverged;
      out.witness = "partial sum exceeded 1e6 at K=" + std::to_string(k);
      break;
    }

    const auto fit = fitter.fit();
    if (fit) {
      last_fit = fit;
      double tail = std::numeric_limits<double>::infinity();
      if (policy.mode == TailMode::geometric && fit->limit_ratio < 1) {
        tail = fit->last * fit->limit_ratio / (1 - fit->limit_ratio);
      } else if (policy.mode == TailMode::power && fit->exponent > kDivergenceExponent) {
        tail = fit->last * (static_cast<double>(k) / M) / (fit->exponent - 1);
      }
      if (std::isfinite(tail)) out.tail_estimate = Decimal{tail * scale};
      if (k >= policy.min_K && tail * scale <= policy.tolerance) {
        out.verdict = Verdict::converged;
        done = true;
        continue;
      }
    }

    if (allow_divergence && k >= next_checkpoint) {
      next_checkpoint *= 2;
      if (fit && fit->exponent <= kDivergenceExponent && fit->ratio <= 1) {
        if (++strikes >= kDivergenceStrikes) {
          std::ostringstream os;
          os << "fitted decay exponent " << fit->exponent << " <= " << kDivergenceExponent
             << " at " << kDivergenceStrikes << " successive doublings up to K=" << k;
          out.verdict = Verdict::diverged;
          out.witness = os.str();
          out.tail_estimate = infinity();
          break;
        }
      } else {
        strikes = 0;
      }
    }
  }

  out.truncation_K = static_cast<int>(K);
  if (last_fit) {
    out.fitted_ratio = last_fit->ratio;
    out.fitted_exponent = last_fit->exponent;
  }
  const Decimal partial = to_decimal(exact_sum) + approx_sum;
  out.value = to_decimal(shape.offset) + to_decimal(shape.scale) * partial;
  out.error_bound = Decimal{scale * err_sum * (1 + 1e-6)} + Decimal{"1e-100"};
  out.last_term = Decimal{last_term} * to_decimal(shape.scale);
  if (!any_approx && out.tail_estimate == 0) {
    out.exact_value = shape.offset + shape.scale * exact_sum;
    out.value = to_decimal(*out.exact_value);
    out.error_bound = 0;
  }
  return out;
}

SeriesResult trivial_result(SeriesMethod method, const Rational& value) {
  SeriesResult out;
  out.method = method;
  out.value = to_decimal(value);
  out.error_bound = 0;
  out.tail_estimate = 0;
  out.last_term = 0;
  out.verdict = Verdict::converged;
  out.exact_value = value;
  return out;
}

bool may_diverge(const MoveSet& moves) {
  return moves.drift_sign() != DriftSign::positive || !moves.finishes_almost_surely();
}

void require_target(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string{what} + ": target must be >= 0");
}

Terms squared_r_terms(PassageCurve& c) {
  Terms t;
  t.support = c.reachability().r_support;
  t.curves = {&c};
  t.exact = [&c](int k) { return Rational{c.r_exact(k) * c.r_exact(k)}; };
  t.approx = [&c](int k) { return r_of(c, k) * r_of(c, k); };
  return t;
}

}  // namespace

SeriesResult p_n_theorem1(const GameSpec& spec, const TailPolicy& policy) {
  CurveCache cache{spec.moves, policy.exact_limit};
  return p_n_theorem1(spec, policy, cache);
}

SeriesResult p_n_theorem1(const GameSpec& spec, const TailPolicy& policy, CurveCache& cache) {
  require_target(spec.n, "p_n_theorem1");
  if (!spec.moves.finishes_almost_surely()) {
    throw std::domain_error("p_n_theorem1: the game " + spec.moves.to_string() +
                            " may never end (needs a+b > 0 or a = -b != 0); use p_n_direct");
  }
  if (spec.n == 0) return trivial_result(SeriesMethod::theorem1, 0);
  Shape shape{make_rational(1, 2), make_rational(-1, 2)};
  return run_series(squared_r_terms(cache.get(spec.n)), policy, shape, false, SeriesMethod::theorem1);
}

SeriesResult p_n_direct(const GameSpec& spec, const TailPolicy& policy) {
  CurveCache cache{spec.moves, policy.exact_limit};
  return p_n_direct(spec, policy, cache);
}

SeriesResult p_n_direct(const GameSpec& spec, const TailPolicy& policy, CurveCache& cache) {
  require_target(spec.n, "p_n_direct");
  if (spec.n == 0) return trivial_result(SeriesMethod::direct, 0);
  PassageCurve& c = cache.get(spec.n);
  Terms t;
  t.support = c.reachability().r_support.intersect(c.reachability().q_support);
  t.curves = {&c};
  t.exact = [&c](int k) { return Rational{c.q_exact(k) * c.r_exact(k)}; };
  t.approx = [&c](int k) { return q_of(c, k) * r_of(c, k); };
  SeriesResult out = run_series(t, policy, Shape{}, may_diverge(spec.moves), SeriesMethod::direct);
  if (!spec.moves.finishes_almost_surely()) {
    c.extend_to(out.truncation_K);
    const Decimal qK = out.truncation_K <= c.exact_upto()
                           ? to_decimal(c.q_exact(out.truncation_K))
                           : Decimal{c.q(out.truncation_K)};
    out.no_winner = qK * qK;
  }
  return out;
}

SeriesResult p_asymmetric(int n1, int n2, const MoveSet& moves, const TailPolicy& policy) {
  CurveCache cache{moves, policy.exact_limit};
  return p_asymmetric(n1, n2, policy, cache);
}

SeriesResult p_asymmetric(int n1, int n2, const TailPolicy& policy, CurveCache& cache) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("p_asymmetric: n1 and n2 must be >= 1");
  const MoveSet& moves = cache.moves();
  PassageCurve& c1 = cache.get(n1);
  PassageCurve& c2 = cache.get(n2);
  const auto& rep1 = c1.reachability();
  const auto& rep2 = c2.reachability();

  Terms t;
  t.curves = {&c1, &c2};
  if (moves.drift_sign() == DriftSign::zero && moves.finishes_almost_surely()) {
    // Second player's wins minus first player's wins; the sum of both is 1.
    t.support = rep2.r_support.intersect(rep1.q_support)
                    .unite(rep1.r_support.intersect(rep2.q_support));
    t.exact = [&c1, &c2](int k) {
      return Rational{c1.q_exact(k) * c2.r_exact(k) - c1.r_exact(k) * c2.q_exact(k - 1)};
    };
    t.approx = [&c1, &c2](int k) {
      return q_of(c1, k) * r_of(c2, k) - r_of(c1, k) * q_of(c2, k - 1);
    };
    Shape shape{make_rational(1, 2), make_rational(1, 2)};
    return run_series(t, policy, shape, false, SeriesMethod::asymmetric);
  }
  t.support = rep2.r_support.intersect(rep1.q_support);
  t.exact = [&c1, &c2](int k) { return Rational{c1.q_exact(k) * c2.r_exact(k)}; };
  t.approx = [&c1, &c2](int k) { return q_of(c1, k) * r_of(c2, k); };
  return run_series(t, policy, Shape{}, may_diverge(moves), SeriesMethod::asymmetric);
}

SeriesResult simultaneous_finish(int n1, int n2, const TailPolicy& policy, CurveCache& cache) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("simultaneous_finish: n1 and n2 must be >= 1");
  PassageCurve& c1 = cache.get(n1);
  PassageCurve& c2 = cache.get(n2);
  Terms t;
  t.support = c1.reachability().r_support.intersect(c2.reachability().r_support);
  t.curves = {&c1, &c2};
  t.exact = [&c1, &c2](int k) { return Rational{c1.r_exact(k) * c2.r_exact(k)}; };
  t.approx = [&c1, &c2](int k) { return r_of(c1, k) * r_of(c2, k); };
  return run_series(t, policy, Shape{}, may_diverge(cache.moves()), SeriesMethod::asymmetric);
}

SeriesResult proposition7_residual(int n1, int n2, const MoveSet& moves, const TailPolicy& policy) {
  CurveCache cache{moves, policy.exact_limit};
  return proposition7_residual(n1, n2, policy, cache);
}

SeriesResult proposition7_residual(int n1, int n2, const TailPolicy& policy, CurveCache& cache) {
  if (!cache.moves().finishes_almost_surely()) {
    throw std::domain_error("proposition7_residual: the game " + cache.moves().to_string() +
                            " may never end (needs a+b > 0 or a = -b != 0)");
  }
  const SeriesResult p12 = p_asymmetric(n1, n2, policy, cache);
  const SeriesResult p21 = p_asymmetric(n2, n1, policy, cache);
  const SeriesResult both = simultaneous_finish(n1, n2, policy, cache);

  SeriesResult out;
  out.method = SeriesMethod::asymmetric;
  out.value = abs(p12.value + p21.value + both.value - 1);
  out.error_bound = p12.error_bound + p21.error_bound + both.error_bound;
  out.tail_estimate = p12.tail_estimate + p21.tail_estimate + both.tail_estimate;
  out.truncation_K = std::max({p12.truncation_K, p21.truncation_K, both.truncation_K});
  out.last_term = both.last_term;
  auto verdicts = {p12.verdict, p21.verdict, both.verdict};
  if (std::all_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::converged; })) {
    out.verdict = Verdict::converged;
  } else if (std::any_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::diverged; })) {
    out.verdict = Verdict::diverged;
  } else {
    out.verdict = Verdict::inconclusive;
  }
  if (p12.exact_value && p21.exact_value && both.exact_value) {
    out.exact_value = abs(Rational{*p12.exact_value + *p21.exact_value + *both.exact_value - 1});
  }
  return out;
}

SeriesResult expected_duration(const GameSpec& spec, const TailPolicy& policy) {
  require_target(spec.n, "expected_duration");
  if (spec.n == 0) return trivial_result(SeriesMethod::duration, 0);
  PassageCurve c{spec, policy.exact_limit};
  Terms t;
  t.first_k = 0;
  t.support = c.reachability().q_support;
  t.curves = {&c};
  t.exact = [&c](int k) { return Rational{c.q_exact(k) * c.q_exact(k)}; };
  t.approx = [&c](int k) { return q_of(c, k) * q_of(c, k); };
  return run_series(t, policy, Shape{}, may_diverge(spec.moves), SeriesMethod::duration);
}

Rational win_within(const GameSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("win_within: k must be >= 1");
  if (spec.n == 0) return 0;
  const PassageTable table = build_passage_table(spec, k);
  Rational sum{0};
  for (int i = 1; i <= k; ++i) sum += table.q(i) * table.r(i);
  return sum;
}

SeriesResult t_value(int n, const TailPolicy& policy, CurveCache& cache) {
  if (n < 1) throw std::invalid_argument("t_value: n must be >= 1");
  return run_series(squared_r_terms(cache.get(n)), policy, Shape{}, may_diverge(cache.moves()),
                    SeriesMethod::theorem1);
}

std::vector<SeriesResult> t_sequence(const MoveSet& moves, int n_max, const TailPolicy& policy) {
  if (n_max < 1) throw std::invalid_argument("t_sequence: n_max must be >= 1");
  std::vector<SeriesResult> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    // One curve at a time keeps memory flat for long zero-drift runs.
    CurveCache cache{moves, policy.exact_limit};
    out.push_back(t_value(n, policy, cache));
  }
  return out;
}

}  // namespace twopile
