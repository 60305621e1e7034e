#include "commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <stdexcept>

using namespace twopile;
using namespace twopile::cli;

namespace {

struct Flags {
  std::string moves = "-1,1";
  int n = 1;
  int n1 = 1;
  int n2 = 1;
  int k = 1;
  std::optional<double> tol;
  std::optional<int> max_k;
  int digits = 15;
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1'000'000;
  std::uint64_t horizon = 0;
  std::optional<std::uint64_t> within;
  unsigned workers = 0;
  std::string which;
  std::string suite = "all";
};

SeriesOptions series_options(const Flags& f) {
  SeriesOptions o;
  o.moves = parse_moves(f.moves);
  o.tolerance = f.tol;
  o.max_k = f.max_k;
  o.digits = f.digits;
  return o;
}

void add_series_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--moves", f.moves, "the two step sizes, a,b")->capture_default_str();
  cmd->add_option("--tol", f.tol, "tail tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-k", f.max_k, "truncation limit (default 200000 at zero drift, else 5000)")
      ->check(CLI::Range(16, 100'000'000));
  cmd->add_option("--digits", f.digits, "significant digits for exact values")
      ->check(CLI::Range(1, kMaxEvalDigits))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-player chip race: exact and series winning probabilities"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "print the record as JSON");
  app.add_flag("--csv", f.csv, "print the table as CSV");

  std::function<OutputRecord()> run;

  auto* pn = app.add_subcommand("pn", "second player's winning probability p_n");
  add_series_flags(pn, f);
  pn->add_option("--n", f.n, "target chip count")->required()->check(CLI::NonNegativeNumber);
  pn->callback([&] { run = [&] { return cmd_pn(series_options(f), f.n); }; });

  auto* pmn = app.add_subcommand("pmn", "p(n1,n2): second player needs n2, first needs n1");
  add_series_flags(pmn, f);
  pmn->add_option("--n1", f.n1, "first player's target")->required()->check(CLI::PositiveNumber);
  pmn->add_option("--n2", f.n2, "second player's target")->required()->check(CLI::PositiveNumber);
  pmn->callback([&] { run = [&] { return cmd_pmn(series_options(f), f.n1, f.n2); }; });

  auto* within = app.add_subcommand("within", "exact probability the second player wins within k rounds");
  add_series_flags(within, f);
  within->add_option("--n", f.n, "target chip count")->required()->check(CLI::PositiveNumber);
  within->add_option("--k", f.k, "number of rounds")->required()->check(CLI::Range(1, 100'000));
  within->callback([&] { run = [&] { return cmd_within(series_options(f), f.n, f.k); }; });

  auto* duration = app.add_subcommand("duration", "expected number of rounds");
  add_series_flags(duration, f);
  duration->add_option("--n", f.n, "target chip count")->required()->check(CLI::PositiveNumber);
  duration->callback([&] { run = [&] { return cmd_duration(series_options(f), f.n); }; });

  auto* passage = app.add_subcommand("passage", "exact r(n,k) and q(n,k) table");
  add_series_flags(passage, f);
  passage->add_option("--n", f.n, "target chip count")->required()->check(CLI::PositiveNumber);
  passage->add_option("--k", f.k, "last move")->required()->check(CLI::Range(1, 100'000));
  passage->callback([&] { run = [&] { return cmd_passage(series_options(f), f.n, f.k); }; });

  auto* table = app.add_subcommand("table", "reproduce a reference table");
  add_series_flags(table, f);
  table->add_option("which", f.which, "table1 | case_minus1_2 | t_values")
      ->required()
      ->check(CLI::IsMember({"table1", "case_minus1_2", "t_values"}));
  table->callback([&] { run = [&] { return cmd_table(series_options(f), f.which); }; });

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo play of the full game");
  simulate->add_option("--moves", f.moves, "the two step sizes, a,b")->capture_default_str();
  simulate->add_option("--n1", f.n1, "first player's target")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--n2", f.n2, "second player's target")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--trials", f.trials, "number of games")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", f.seed, "64-bit seed")->capture_default_str();
  simulate->add_option("--horizon", f.horizon, "rounds before a game is censored (0: default)");
  simulate->add_option("--within", f.within, "also estimate the second player's win within k rounds");
  simulate->add_option("--workers", f.workers, "threads (0: all cores); results do not depend on it");
  simulate->callback([&] {
    run = [&] {
      SimulateOptions o;
      o.moves = parse_moves(f.moves);
      o.n1 = f.n1;
      o.n2 = f.n2;
      o.trials = f.trials;
      o.seed = f.seed;
      o.horizon = f.horizon;
      o.within_k = f.within;
      o.workers = f.workers;
      return cmd_simulate(o);
    };
  });

  auto* verify = app.add_subcommand("verify", "run identity and oracle checks");
  verify->add_option("suite", f.suite, "all | exact | oracles | prop7 | recurrence")
      ->check(CLI::IsMember({"all", "exact", "oracles", "prop7", "recurrence"}))
      ->capture_default_str();
  verify->callback([&] { run = [&] { return cmd_verify(f.suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (f.json && f.csv) {
    std::cerr << "--json and --csv are exclusive\n";
    return kUsage;
  }

  try {
    const OutputRecord rec = run();
    if (f.json) {
      std::cout << rec.to_json().dump(2) << '\n';
    } else if (f.csv) {
      std::cout << rec.to_csv();
    } else {
      std::cout << rec.to_text();
    }
    return rec.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
