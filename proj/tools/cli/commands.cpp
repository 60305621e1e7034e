#include "commands.hpp"

#include "twopile/closed_forms.hpp"
#include "twopile/sequence_lab.hpp"
#include "twopile/series.hpp"
#include "twopile/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace twopile::cli {

// ---------------------------------------------------------------------------
// Rendering

Json OutputRecord::to_json() const {
  Json in = Json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  return Json{{"command", command}, {"inputs", in},      {"describes", describes},
              {"columns", columns}, {"rows", rows},      {"notes", notes},
              {"exit_code", exit_code}, {"data", data}};
}

OutputRecord OutputRecord::from_json(const Json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  r.describes = j.at("describes").get<std::string>();
  r.columns = j.at("columns").get<std::vector<std::string>>();
  r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.exit_code = j.at("exit_code").get<int>();
  if (j.contains("data")) r.data = j.at("data");
  return r;
}

std::string OutputRecord::to_text() const {
  std::ostringstream os;
  os << "# " << command;
  for (const auto& [k, v] : inputs) os << " --" << k << '=' << v;
  os << '\n';
  if (!describes.empty()) os << "# " << describes << '\n';

  std::vector<std::size_t> width(columns.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << s << '\n';
  };
  if (!columns.empty()) line(columns);
  for (const auto& row : rows) line(row);
  for (const auto& n : notes) os << "# " << n << '\n';
  return os.str();
}

std::string OutputRecord::to_csv() const {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << cell(columns[c]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell(row[c]);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Published reference values shown next to computed ones

namespace {

PiLinear pl(long c0, long num, long den = 1) { return PiLinear{Rational{c0}, make_rational(num, den)}; }

std::array<PiLinear, 6> published_t_values() {
  return {pl(-1, 4), pl(-5, 16), pl(-25, 236, 3), pl(-129, 1216, 3), pl(-681, 32092, 15),
          pl(-3653, 172144, 15)};
}

struct PublishedRow {
  int n;
  const char* t_value;
  const char* p_value;
};

constexpr std::array<PublishedRow, 8> kPublishedMinus1Plus2 = {{
    {1, "0.3221721826105", "0.33891390869471156"},
    {2, "0.2886887304423", "0.35565563477884626"},
    {3, "0.1547549217692", "0.42262253911538507"},
    {4, "0.1241072133089", "0.43794639334553199"},
    {5, "0.0941564190484", "0.45292179047578731"},
    {10, "0.047917368748", "0.47604131562562199"},
    {20, "0.028469734522", "0.48576513273891113"},
    {100, "0.010952807500", "0.49452359624969611"},
}};

// Row n1, column n2.
std::array<std::array<PiLinear, 5>, 5> published_table_minus1_plus1() {
  return {{
      {pl(1, -2), pl(-1, 4), pl(-3, 10), pl(1, -8, 3), pl(5, -46, 3)},
      {pl(2, -4), pl(3, -8), pl(-6, 20), pl(-15, 48), pl(10, -92, 3)},
      {pl(1, -2, 3), pl(7, -20), pl(13, -118, 3), pl(-31, 296, 3), pl(-75, 710, 3)},
      {pl(0, 8, 3), pl(-1, 16, 3), pl(32, -296, 3), pl(65, -608, 3), pl(-160, 504)},
      {pl(1, -2, 5), pl(-9, 92, 3), pl(-19, 926, 15), pl(161, -504), pl(341, -16046, 15)},
  }};
}

LinearRecurrence t_recurrence() {
  using C = LinearRecurrence::Coefficient;
  return LinearRecurrence{{C{-1, 0}, C{7, 5}, C{-7, -16}, C{1, 3}}};
}

// ---------------------------------------------------------------------------
// Formatting helpers

std::string sci(const Decimal& x, int digits = 2) {
  if (boost::multiprecision::isinf(x)) return "inf";
  return x.str(digits, std::ios_base::scientific);
}

std::string sci(double x, int digits = 2) { return sci(Decimal{x}, digits); }

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

/// Decimal of an exact value with `digits` significant digits.
std::string exact_decimal(const PiLinear& x, int digits) {
  if (x.invpi_part() == 0 && x.const_part().get_den() == 1) return x.const_part().get_str();
  return pilinear_eval(x, digits).to_string();
}

std::string exact_decimal(const Rational& x, int digits) { return exact_decimal(PiLinear{x, 0}, digits); }

/// Only the digits the bound justifies; series that did not converge show
/// ten places and are flagged by the verdict column.
std::string series_value(const SeriesResult& s, int digits) {
  if (s.exact_value) return exact_decimal(*s.exact_value, digits);
  if (s.verdict == Verdict::converged) return s.approx().to_string();
  return format_fixed(s.value, 10);
}

std::string series_bound(const SeriesResult& s) {
  if (s.exact_value) return "0";
  return sci(s.error_bound + s.tail_estimate);
}

TailPolicy policy_for(const SeriesOptions& o) {
  TailPolicy p = TailPolicy::for_moves(o.moves, o.tolerance.value_or(1e-9));
  if (o.max_k) p.max_K = *o.max_k;
  p.validate();
  return p;
}

void add_policy_inputs(OutputRecord& r, const SeriesOptions& o, const TailPolicy& p) {
  r.inputs.emplace_back("moves", std::to_string(o.moves.lo()) + "," + std::to_string(o.moves.hi()));
  r.inputs.emplace_back("tol", sci(p.tolerance, 1));
  r.inputs.emplace_back("max-k", std::to_string(p.max_K));
}

std::vector<std::string> series_row(std::string label, const SeriesResult& s, int digits) {
  return {std::move(label), series_value(s, digits), series_bound(s), std::to_string(s.truncation_K),
          to_string(s.verdict)};
}

const std::vector<std::string> kSeriesColumns = {"method", "value", "bound", "K", "verdict"};

}  // namespace

// ---------------------------------------------------------------------------
// Commands

OutputRecord cmd_pn(const SeriesOptions& o, int n) {
  if (n < 0) throw std::invalid_argument("--n must be >= 0");
  const TailPolicy p = policy_for(o);
  OutputRecord r;
  r.command = "pn";
  add_policy_inputs(r, o, p);
  r.inputs.emplace_back("n", std::to_string(n));
  r.describes = "probability that the second player collects n chips first";
  r.columns = kSeriesColumns;

  CurveCache cache{o.moves, p.exact_limit};
  const GameSpec spec{o.moves, n};
  const SeriesResult direct = p_n_direct(spec, p, cache);
  std::optional<SeriesResult> t1;
  if (o.moves.finishes_almost_surely()) {
    t1 = p_n_theorem1(spec, p, cache);
    r.rows.push_back(series_row("theorem1", *t1, o.digits));
    r.data["theorem1"] = series_result_to_json(*t1);
  } else {
    r.rows.push_back({"theorem1", "n/a", "-", "-", "game may never end"});
  }
  r.rows.push_back(series_row("direct", direct, o.digits));
  r.data["direct"] = series_result_to_json(direct);

  if (t1) {
    r.notes.push_back("agreement |theorem1 - direct| = " + sci(abs(t1->value - direct.value)));
  }
  if (direct.no_winner) r.notes.push_back("no-winner probability ~ " + sci(*direct.no_winner, 6));
  if (direct.verdict != Verdict::converged && t1 && t1->verdict == Verdict::converged) {
    r.notes.push_back("direct sum converges like 1/K at zero drift; theorem1 is the reported value");
  }
  const SeriesResult& primary = t1 ? *t1 : direct;
  r.exit_code = primary.verdict == Verdict::converged ? kOk : kNotConverged;
  return r;
}

OutputRecord cmd_pmn(const SeriesOptions& o, int n1, int n2) {
  const TailPolicy p = policy_for(o);
  OutputRecord r;
  r.command = "pmn";
  add_policy_inputs(r, o, p);
  r.inputs.emplace_back("n1", std::to_string(n1));
  r.inputs.emplace_back("n2", std::to_string(n2));
  r.describes = "probability that the second player reaches n2 before the first reaches n1";
  r.columns = kSeriesColumns;
  CurveCache cache{o.moves, p.exact_limit};
  const SeriesResult s = p_asymmetric(n1, n2, p, cache);
  r.rows.push_back(series_row("asymmetric", s, o.digits));
  r.data["asymmetric"] = series_result_to_json(s);
  if (o.moves == MoveSet{-1, 1} && n1 >= 1 && n1 <= 5 && n2 >= 1 && n2 <= 5) {
    const PiLinear form = published_table_minus1_plus1()[static_cast<std::size_t>(n1 - 1)]
                                                        [static_cast<std::size_t>(n2 - 1)];
    r.notes.push_back("exact form " + form.to_string() + " = " + exact_decimal(form, o.digits) +
                      ", |delta| = " + sci(abs(s.value - form.to_decimal())));
  }
  r.exit_code = s.verdict == Verdict::converged ? kOk : kNotConverged;
  return r;
}

OutputRecord cmd_within(const SeriesOptions& o, int n, int k) {
  OutputRecord r;
  r.command = "within";
  r.inputs.emplace_back("moves", std::to_string(o.moves.lo()) + "," + std::to_string(o.moves.hi()));
  r.inputs.emplace_back("n", std::to_string(n));
  r.inputs.emplace_back("k", std::to_string(k));
  r.describes = "probability that the second player wins within k rounds";
  r.columns = {"k", "exact", "decimal"};
  const Rational w = win_within(GameSpec{o.moves, n}, k);
  r.rows.push_back({std::to_string(k), to_string(w), exact_decimal(w, o.digits)});
  r.data["exact"] = rational_to_json(w);
  return r;
}

OutputRecord cmd_duration(const SeriesOptions& o, int n) {
  const TailPolicy p = policy_for(o);
  OutputRecord r;
  r.command = "duration";
  add_policy_inputs(r, o, p);
  r.inputs.emplace_back("n", std::to_string(n));
  r.describes = "expected number of rounds, sum of q(n,k)^2 over k >= 0";
  r.columns = kSeriesColumns;
  const SeriesResult s = expected_duration(GameSpec{o.moves, n}, p);
  r.rows.push_back(series_row("duration", s, o.digits));
  r.data["duration"] = series_result_to_json(s);
  if (s.exact_value) r.notes.push_back("exact value " + to_string(*s.exact_value));
  if (!s.witness.empty()) r.notes.push_back("witness: " + s.witness);
  // A divergence verdict is a definite answer; only an open verdict fails.
  r.exit_code = s.verdict == Verdict::inconclusive ? kNotConverged : kOk;
  return r;
}

OutputRecord cmd_passage(const SeriesOptions& o, int n, int k) {
  OutputRecord r;
  r.command = "passage";
  r.inputs.emplace_back("moves", std::to_string(o.moves.lo()) + "," + std::to_string(o.moves.hi()));
  r.inputs.emplace_back("n", std::to_string(n));
  r.inputs.emplace_back("k", std::to_string(k));
  r.describes = "first-passage r(n,k) and survival q(n,k), exact";
  const GameSpec spec{o.moves, n};
  const PassageTable t = build_passage_table(spec, k);
  r.columns = {"k", "r", "q", "r_decimal", "q_decimal"};
  for (int i = 0; i <= k; ++i) {
    const Rational ri = i == 0 ? Rational{0} : t.r(i);
    r.rows.push_back({std::to_string(i), to_string(ri), to_string(t.q(i)),
                      decimal_string(to_decimal(ri), 15), decimal_string(to_decimal(t.q(i)), 15)});
  }
  r.notes.push_back("r support: " + passage_gcd_reachability(spec).r_support.describe());
  r.data["table"] = passage_table_to_json(t);
  return r;
}

OutputRecord cmd_table(const SeriesOptions& o, const std::string& which) {
  OutputRecord r;
  r.command = "table";
  r.inputs.emplace_back("which", which);

  if (which == "table1") {
    SeriesOptions opt = o;
    opt.moves = MoveSet{-1, 1};
    const TailPolicy p = policy_for(opt);
    add_policy_inputs(r, opt, p);
    r.describes = "p(n1,n2) for {-1,1}: computed series next to exact pi-linear forms";
    r.columns = {"n1", "n2", "computed", "bound", "exact form", "exact decimal", "|delta|", "verdict"};
    CurveCache cache{opt.moves, p.exact_limit};
    const auto forms = published_table_minus1_plus1();
    for (int n1 = 1; n1 <= 5; ++n1) {
      for (int n2 = 1; n2 <= 5; ++n2) {
        const SeriesResult s = p_asymmetric(n1, n2, p, cache);
        const PiLinear& f = forms[static_cast<std::size_t>(n1 - 1)][static_cast<std::size_t>(n2 - 1)];
        r.rows.push_back({std::to_string(n1), std::to_string(n2), series_value(s, o.digits),
                          series_bound(s), f.to_string(), exact_decimal(f, o.digits),
                          sci(abs(s.value - f.to_decimal())), to_string(s.verdict)});
        r.data[std::to_string(n1) + "," + std::to_string(n2)] = series_result_to_json(s);
        if (s.verdict != Verdict::converged) r.exit_code = kNotConverged;
      }
    }
    return r;
  }

  if (which == "case_minus1_2") {
    SeriesOptions opt = o;
    opt.moves = MoveSet{-1, 2};
    const TailPolicy p = policy_for(opt);
    add_policy_inputs(r, opt, p);
    r.describes = "{-1,2}: sum of r(n,k)^2 and p_n next to published decimals";
    r.columns = {"n", "sum r^2", "published", "|delta|", "p_n", "published", "|delta|", "verdict"};
    for (const auto& row : kPublishedMinus1Plus2) {
      CurveCache cache{opt.moves, p.exact_limit};
      const SeriesResult t = t_value(row.n, p, cache);
      const SeriesResult pn = p_n_theorem1(GameSpec{opt.moves, row.n}, p, cache);
      r.rows.push_back({std::to_string(row.n), series_value(t, o.digits), row.t_value,
                        sci(abs(t.value - Decimal{row.t_value})), series_value(pn, o.digits),
                        row.p_value, sci(abs(pn.value - Decimal{row.p_value})),
                        to_string(pn.verdict)});
      r.data[std::to_string(row.n)] = Json{{"sum_r2", series_result_to_json(t)}, {"p_n", series_result_to_json(pn)}};
      if (pn.verdict != Verdict::converged || t.verdict != Verdict::converged) r.exit_code = kNotConverged;
    }
    return r;
  }

  if (which == "t_values") {
    SeriesOptions opt = o;
    opt.moves = MoveSet{-1, 1};
    const TailPolicy p = policy_for(opt);
    add_policy_inputs(r, opt, p);
    r.describes = "{-1,1}: sum of r(n,k)^2 next to exact pi-linear forms";
    r.columns = {"n", "computed", "bound", "exact form", "exact decimal", "|delta|", "verdict"};
    const auto forms = published_t_values();
    for (int n = 1; n <= 6; ++n) {
      CurveCache cache{opt.moves, p.exact_limit};
      const SeriesResult t = t_value(n, p, cache);
      const PiLinear& f = forms[static_cast<std::size_t>(n - 1)];
      r.rows.push_back({std::to_string(n), series_value(t, o.digits), series_bound(t), f.to_string(),
                        exact_decimal(f, o.digits), sci(abs(t.value - f.to_decimal())),
                        to_string(t.verdict)});
      r.data[std::to_string(n)] = series_result_to_json(t);
      if (t.verdict != Verdict::converged) r.exit_code = kNotConverged;
    }
    const std::vector<PiLinear> seq(forms.begin(), forms.end());
    const RecurrenceCheck check = verify_recurrence(t_recurrence(), seq, 1);
    r.notes.push_back(t_recurrence().to_string() + (check.holds ? " holds exactly" : " FAILS") +
                      " on the exact forms");
    return r;
  }

  throw std::invalid_argument("unknown table '" + which + "' (table1, case_minus1_2, t_values)");
}

OutputRecord cmd_simulate(const SimulateOptions& o) {
  SimConfig cfg;
  cfg.moves = o.moves;
  cfg.n1 = o.n1;
  cfg.n2 = o.n2;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.max_moves_per_game = o.horizon;
  cfg.within_k = o.within_k;
  cfg.workers = o.workers;
  const SimReport rep = run_simulation(cfg);

  OutputRecord r;
  r.command = "simulate";
  r.inputs.emplace_back("moves", std::to_string(o.moves.lo()) + "," + std::to_string(o.moves.hi()));
  r.inputs.emplace_back("n1", std::to_string(o.n1));
  r.inputs.emplace_back("n2", std::to_string(o.n2));
  r.inputs.emplace_back("trials", std::to_string(o.trials));
  r.inputs.emplace_back("seed", std::to_string(o.seed));
  r.inputs.emplace_back("horizon", std::to_string(rep.horizon));
  if (o.within_k) r.inputs.emplace_back("within", std::to_string(*o.within_k));
  r.describes = "Monte Carlo estimates of the game outcome";
  r.columns = {"estimate", "value", "std_error", "count"};
  const auto& c = rep.counts;
  r.rows.push_back({"p1_win_rate", fmt_double(rep.p1_win_rate), sci(rep.p1_win_se), std::to_string(c.p1_wins)});
  r.rows.push_back({"p2_win_rate", fmt_double(rep.p2_win_rate), sci(rep.p2_win_se), std::to_string(c.p2_wins)});
  r.rows.push_back({"censored_rate", fmt_double(rep.censored_rate), sci(rep.censored_se), std::to_string(c.censored)});
  if (rep.p2_within_rate) {
    r.rows.push_back({"p2_within_rate", fmt_double(*rep.p2_within_rate), sci(*rep.p2_within_se),
                      std::to_string(c.p2_wins_within)});
  }
  r.rows.push_back({"mean_duration_uncensored", fmt_double(rep.mean_duration_uncensored),
                    sci(rep.mean_duration_se), std::to_string(c.p1_wins + c.p2_wins)});
  r.data["report"] = sim_report_to_json(rep);
  return r;
}

// ---------------------------------------------------------------------------
// Verification suite

namespace {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

const std::vector<MoveSet> kIdentityMoveSets = {MoveSet{-1, 1}, MoveSet{-1, 2}, MoveSet{1, 2},
                                                MoveSet{-2, 1}, MoveSet{-3, 2}};

std::vector<Check> exact_checks() {
  std::vector<Check> out;
  for (const MoveSet& m : kIdentityMoveSets) {
    long failures = 0;
    long checked = 0;
    for (int n = 1; n <= 8; ++n) {
      const PassageTable t = build_passage_table(GameSpec{m, n}, 200);
      Rational cum = 0;
      Rational tele = 0;
      for (int k = 1; k <= 200; ++k) {
        cum += t.r(k);
        tele += (t.q(k - 1) + t.q(k)) * t.r(k);
        failures += t.r(k) != t.q(k - 1) - t.q(k);
        failures += t.q(k) != 1 - cum;
        failures += tele != 1 - t.q(k) * t.q(k);
        checked += 3;
      }
    }
    out.push_back({"exact identities " + m.to_string(), failures == 0,
                   std::to_string(checked) + " equalities, " + std::to_string(failures) + " failed"});
  }
  return out;
}

std::vector<Check> oracle_checks() {
  std::vector<Check> out;
  long bad = 0;
  for (int n = 1; n <= 9; ++n) {
    const PassageTable t = build_passage_table(GameSpec{MoveSet{-1, 1}, n}, 61);
    for (int k = 0; k <= 60; ++k) {
      bad += rational_pow2_scale(catalan_C(n, k), static_cast<unsigned long>(k + 1)) != t.r(k + 1);
    }
  }
  out.push_back({"ballot counts vs DP (n<=9, k<=60)", bad == 0, std::to_string(bad) + " mismatches"});

  bad = 0;
  const RaneyTable D{7, 45};
  for (int n = 1; n <= 7; ++n) {
    const PassageTable t = build_passage_table(GameSpec{MoveSet{-1, 2}, n}, 46);
    for (int k = 0; k <= 45; ++k) {
      bad += rational_pow2_scale(D.at(n, k), static_cast<unsigned long>(k + 1)) != t.r(k + 1);
    }
  }
  out.push_back({"Raney recurrence vs DP (n<=7, k<=45)", bad == 0, std::to_string(bad) + " mismatches"});

  bad = 0;
  const PassageTable t1 = build_passage_table(GameSpec{MoveSet{-1, 1}, 1}, 200);
  Rational within = 0;
  for (int k = 1; k <= 200; ++k) {
    within += t1.q(k) * t1.r(k);
    bad += q1_closed_minus1_plus1(k) != t1.q(k);
    bad += win_within_closed(k) != within;
  }
  out.push_back({"q(1,k) and win-within closed forms (k<=200)", bad == 0,
                 std::to_string(bad) + " mismatches"});
  return out;
}

std::vector<Check> prop7_checks() {
  std::vector<Check> out;
  for (const MoveSet& m : {MoveSet{-1, 1}, MoveSet{-1, 2}}) {
    const TailPolicy p = TailPolicy::for_moves(m);
    CurveCache cache{m, p.exact_limit};
    Decimal worst = 0;
    bool all_converged = true;
    for (int n1 = 1; n1 <= 5; ++n1) {
      for (int n2 = 1; n2 <= 5; ++n2) {
        const SeriesResult res = proposition7_residual(n1, n2, p, cache);
        worst = std::max(worst, res.value);
        all_converged = all_converged && res.verdict == Verdict::converged;
      }
    }
    const bool ok = all_converged && worst < Decimal{3 * p.tolerance};
    out.push_back({"p12 + p21 + sum r1 r2 = 1 " + m.to_string() + " (n1,n2<=5)", ok,
                   "max residual " + sci(worst)});
  }
  return out;
}

std::vector<Check> recurrence_checks() {
  std::vector<Check> out;
  const auto forms = published_t_values();
  const RecurrenceCheck exact =
      verify_recurrence(t_recurrence(), std::vector<PiLinear>(forms.begin(), forms.end()), 1);
  out.push_back({"T recurrence on exact T1..T6", exact.holds,
                 std::to_string(exact.instances_checked) + " instances"});

  const MoveSet m{-1, 1};
  const TailPolicy p = TailPolicy::for_moves(m);
  const auto ts = t_sequence(m, 12, p);
  const LinearRecurrence rec = t_recurrence();
  bool ok = true;
  Decimal worst_ratio = 0;
  for (long n = 1; n + 3 <= 12; ++n) {
    Decimal residual = 0;
    Decimal allowance = 0;
    for (int i = 0; i <= 3; ++i) {
      const SeriesResult& t = ts[static_cast<std::size_t>(n - 1 + i)];
      const Decimal w = to_decimal(rec.weight(i, n));
      residual += w * t.value;
      allowance += abs(w) * (t.error_bound + t.tail_estimate);
      ok = ok && t.verdict == Verdict::converged;
    }
    ok = ok && abs(residual) <= allowance;
    if (allowance > 0) worst_ratio = std::max(worst_ratio, abs(residual) / allowance);
  }
  out.push_back({"T recurrence on computed T1..T12", ok,
                 "max |residual| / weighted tail allowance = " + sci(worst_ratio)});
  return out;
}

}  // namespace

OutputRecord cmd_verify(const std::string& suite) {
  static const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> suites = {
      {"exact", exact_checks},
      {"oracles", oracle_checks},
      {"prop7", prop7_checks},
      {"recurrence", recurrence_checks},
  };
  OutputRecord r;
  r.command = "verify";
  r.inputs.emplace_back("suite", suite);
  r.describes = "identity and oracle checks";
  r.columns = {"status", "check", "detail"};
  bool known = suite == "all";
  for (const auto& [name, run] : suites) {
    if (suite != "all" && suite != name) continue;
    known = true;
    for (const Check& c : run()) {
      r.rows.push_back({c.ok ? "PASS" : "FAIL", c.name, c.detail});
      if (!c.ok) r.exit_code = kNotConverged;
    }
  }
  if (!known) {
    throw std::invalid_argument("unknown suite '" + suite + "' (all, exact, oracles, prop7, recurrence)");
  }
  return r;
}

}  // namespace twopile::cli
