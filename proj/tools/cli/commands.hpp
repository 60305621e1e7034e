#pragma once

#include "twopile/first_passage.hpp"
#include "twopile/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twopile::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNotConverged = 2 };

/// Result of one command: echo, inputs, a table of string cells and notes.
/// Every rendering is derived from these fields only.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string describes;  // which quantity the table reproduces
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  int exit_code = kOk;
  Json data = Json::object();  // full library results behind the rows; JSON only

  Json to_json() const;
  static OutputRecord from_json(const Json& j);
  std::string to_text() const;
  std::string to_csv() const;
};

struct SeriesOptions {
  MoveSet moves{-1, 1};
  std::optional<double> tolerance;
  std::optional<int> max_k;
  int digits = 15;  // significant digits for exact pi-linear forms
};

OutputRecord cmd_pn(const SeriesOptions& o, int n);
OutputRecord cmd_pmn(const SeriesOptions& o, int n1, int n2);
OutputRecord cmd_within(const SeriesOptions& o, int n, int k);
OutputRecord cmd_duration(const SeriesOptions& o, int n);
OutputRecord cmd_passage(const SeriesOptions& o, int n, int k);

/// which: table1 | case_minus1_2 | t_values
OutputRecord cmd_table(const SeriesOptions& o, const std::string& which);

struct SimulateOptions {
  MoveSet moves{-1, 1};
  int n1 = 1;
  int n2 = 1;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t horizon = 0;  // 0: default for the move set
  std::optional<std::uint64_t> within_k;
  unsigned workers = 0;
};

OutputRecord cmd_simulate(const SimulateOptions& o);

/// suite: all | exact | oracles | prop7 | recurrence
OutputRecord cmd_verify(const std::string& suite);

}  // namespace twopile::cli
