#include "twopile/first_passage.hpp"

#include "walkers.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twopile {

MoveSet::MoveSet(int a, int b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (lo_ < -kMaxStep || hi_ > kMaxStep) {
    throw std::invalid_argument("move magnitude exceeds " + std::to_string(kMaxStep));
  }
}

bool MoveSet::finishes_almost_surely() const {
  return sum() > 0 || (sum() == 0 && lo_ != hi_);
}

std::string MoveSet::to_string() const {
  return "{" + std::to_string(lo_) + "," + std::to_string(hi_) + "}";
}

MoveSet parse_moves(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c != ' ' && c != '{' && c != '}') cleaned += c;
  }
  auto comma = cleaned.find(',');
  if (comma == std::string::npos || cleaned.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("moves must look like 'a,b', got '" + text + "'");
  }
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) {
      throw std::invalid_argument("moves must be integers, got '" + text + "'");
    }
    return v;
  };
  return MoveSet{to_int(cleaned.substr(0, comma)), to_int(cleaned.substr(comma + 1))};
}

GameSpec::GameSpec(MoveSet m, int target) : moves(m), n(target) {
  if (target < 0) throw std::invalid_argument("target n must be >= 0");
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxPatternModulus = 1 << 16;

long ceil_div(long x, long y) { return x >= 0 ? (x + y - 1) / y : -((-x) / y); }

}  // namespace

SupportPattern::SupportPattern(int modulus, std::vector<bool> residues, long first_k,
                               std::optional<long> last_k)
    : modulus_(modulus), residues_(std::move(residues)), first_k_(first_k), last_k_(last_k) {
  if (modulus_ < 1 || static_cast<int>(residues_.size()) != modulus_) {
    throw std::invalid_argument("SupportPattern: residue table must have modulus entries");
  }
}

SupportPattern SupportPattern::none() { return SupportPattern{1, {false}, 0, std::nullopt}; }

bool SupportPattern::allows(long k) const {
  if (k < first_k_) return false;
  if (last_k_ && k > *last_k_) return false;
  return residues_[static_cast<std::size_t>(k % modulus_)];
}

bool SupportPattern::empty() const { return exhausted_after(first_k_ - 1); }

bool SupportPattern::exhausted_after(long K) const {
  const long start = std::max(K + 1, first_k_);
  const long stop = last_k_ ? std::min(*last_k_, start + modulus_ - 1) : start + modulus_ - 1;
  for (long k = start; k <= stop; ++k) {
    if (allows(k)) return false;
  }
  return true;
}

namespace {

template <typename Combine>
SupportPattern combine(const SupportPattern& x, const SupportPattern& y, long first,
                       std::optional<long> last, Combine op) {
  const long m = std::lcm(static_cast<long>(x.modulus()), static_cast<long>(y.modulus()));
  if (m > kMaxPatternModulus) {
    // Too fine to tabulate; fall back to a coarser (still valid) superset.
    return SupportPattern{1, {true}, first, last};
  }
  std::vector<bool> res(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    res[static_cast<std::size_t>(i)] =
        op(x.residues()[static_cast<std::size_t>(i % x.modulus())],
           y.residues()[static_cast<std::size_t>(i % y.modulus())]);
  }
  return SupportPattern{static_cast<int>(m), std::move(res), first, last};
}

}  // namespace

SupportPattern SupportPattern::intersect(const SupportPattern& o) const {
  std::optional<long> last;
  if (last_k_ && o.last_k_) {
    last = std::min(*last_k_, *o.last_k_);
  } else {
    last = last_k_ ? last_k_ : o.last_k_;
  }
  return combine(*this, o, std::max(first_k_, o.first_k_), last,
                 [](bool p, bool q) { return p && q; });
}

SupportPattern SupportPattern::unite(const SupportPattern& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  std::optional<long> last;
  if (last_k_ && o.last_k_) last = std::max(*last_k_, *o.last_k_);
  // A residue allowed by only one side is still only allowed from that
  // side's first_k on, so uniting keeps the smaller first_k as a superset.
  return combine(*this, o, std::min(first_k_, o.first_k_), last,
                 [](bool p, bool q) { return p || q; });
}

std::string SupportPattern::describe() const {
  if (empty()) return "never nonzero";
  std::ostringstream os;
  if (last_k_ && *last_k_ - first_k_ < modulus_) {
    os << "nonzero only for k in {";
    bool first = true;
    for (long k = first_k_; k <= *last_k_; ++k) {
      if (!allows(k)) continue;
      os << (first ? "" : ",") << k;
      first = false;
    }
    os << "}";
    return os.str();
  }
  os << "k >= " << first_k_;
  if (last_k_) os << ", k <= " << *last_k_;
  if (modulus_ > 1) {
    os << ", k mod " << modulus_ << " in {";
    bool first = true;
    for (int i = 0; i < modulus_; ++i) {
      if (!residues_[static_cast<std::size_t>(i)]) continue;
      os << (first ? "" : ",") << i;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

ReachabilityReport passage_gcd_reachability(const GameSpec& spec) {
  const long a = spec.moves.lo();
  const long b = spec.moves.hi();
  const long n = spec.n;
  ReachabilityReport rep;

  if (n <= 0) {
    // Target already met before the first move.
    rep.r_support = SupportPattern::none();
    rep.q_support = SupportPattern{1, {true}, 0, -1};
    rep.summary = "n = 0: the first player wins before any move";
    return rep;
  }

  // q(n,k) > 0 unless every path has crossed, which needs a > 0.
  if (a > 0) {
    rep.q_support = SupportPattern{1, {true}, 0, ceil_div(n, a) - 1};
  } else {
    rep.q_support = SupportPattern{};
  }

  if (b <= 0) {
    rep.r_support = SupportPattern::none();
  } else if (a == b) {
    const long k0 = ceil_div(n, b);
    rep.r_support = SupportPattern{1, {true}, k0, k0};
  } else {
    const long g = b - a;
    const long m = g / std::gcd(b, g);
    std::vector<bool> res(static_cast<std::size_t>(m), false);
    if (m <= kMaxPatternModulus) {
      for (long i = 0; i < m; ++i) {
        const long pos = ((b * i) % g + g) % g;
        // Some s in [n, n+b-1] with s == pos (mod g)?
        if (b >= g) {
          res[static_cast<std::size_t>(i)] = true;
        } else {
          const long s = n + (((pos - n) % g) + g) % g;
          res[static_cast<std::size_t>(i)] = s <= n + b - 1;
        }
      }
      std::optional<long> last;
      if (a > 0) last = ceil_div(n, a);
      rep.r_support = SupportPattern{static_cast<int>(m), std::move(res), ceil_div(n, b), last};
    } else {
      std::optional<long> last;
      if (a > 0) last = ceil_div(n, a);
      rep.r_support = SupportPattern{1, {true}, ceil_div(n, b), last};
    }
  }
  rep.summary = "r(n,k) " + rep.r_support.describe() + "; q(n,k) " + rep.q_support.describe();
  return rep;
}

// ---------------------------------------------------------------------------

PassageTable::PassageTable(GameSpec spec, std::vector<Rational> r, std::vector<Rational> q)
    : spec_(spec), r_(std::move(r)), q_(std::move(q)) {
  if (q_.empty() || r_.size() != q_.size()) {
    throw std::invalid_argument("PassageTable: r and q must both cover k = 0..K");
  }
}

const Rational& PassageTable::r(int k) const {
  if (k < 1 || k > K()) throw std::out_of_range("PassageTable::r: k out of range");
  return r_[static_cast<std::size_t>(k)];
}

const Rational& PassageTable::q(int k) const {
  if (k < 0 || k > K()) throw std::out_of_range("PassageTable::q: k out of range");
  return q_[static_cast<std::size_t>(k)];
}

PassageTable build_passage_table(const GameSpec& spec, int K) {
  if (spec.n < 1) {
    throw std::invalid_argument("build_passage_table: n must be >= 1 (n = 0 is decided before any move)");
  }
  if (K < 1) throw std::invalid_argument("build_passage_table: K must be >= 1");

  std::vector<Rational> r(static_cast<std::size_t>(K) + 1);
  std::vector<Rational> q(static_cast<std::size_t>(K) + 1);
  r[0] = 0;
  q[0] = 1;
  detail::ExactWalker walker{spec.moves, spec.n};
  for (int k = 1; k <= K; ++k) {
    Integer crossed = walker.step();
    r[static_cast<std::size_t>(k)] = rational_pow2_scale(crossed, static_cast<unsigned long>(k));
    q[static_cast<std::size_t>(k)] =
        rational_pow2_scale(walker.survivors(), static_cast<unsigned long>(k));
  }
  return PassageTable{spec, std::move(r), std::move(q)};
}

}  // namespace twopile
