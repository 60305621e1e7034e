#pragma once

// JSON and CSV forms of the library's values. Exact numbers travel as
// strings ("num/den"), decimals as fixed-point strings so no digits are
// lost to binary floating point. Layout is documented in docs/json_schema.md.

#include "twopile/first_passage.hpp"
#include "twopile/numeric.hpp"
#include "twopile/series.hpp"
#include "twopile/simulator.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace twopile {

using Json = nlohmann::ordered_json;

/// Significant digits used when a Decimal is written without an error bound.
inline constexpr int kJsonDecimalDigits = 30;

std::string decimal_string(const Decimal& x, int significant = kJsonDecimalDigits);

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"const": "c0", "inv_pi": "c1"}
Json pilinear_to_json(const PiLinear& x);
PiLinear pilinear_from_json(const Json& j);

Json moves_to_json(const MoveSet& m);
MoveSet moves_from_json(const Json& j);

Json passage_table_to_json(const PassageTable& t);
PassageTable passage_table_from_json(const Json& j);

/// Header "k,r,q,r_decimal,q_decimal"; one row per k = 0..K (r(n,0) = 0).
std::string passage_table_csv(const PassageTable& t);

Json series_result_to_json(const SeriesResult& s);
Json sim_report_to_json(const SimReport& r);

}  // namespace twopile
