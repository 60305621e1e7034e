#include "twopile/serialize.hpp"

#include <boost/multiprecision/number.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace twopile {

std::string decimal_string(const Decimal& x, int significant) {
  return x.str(significant, std::ios_base::scientific);
}

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational{j.get<long>()};
  return parse_rational(j.get<std::string>());
}

Json pilinear_to_json(const PiLinear& x) {
  return Json{{"const", to_string(x.const_part())}, {"inv_pi", to_string(x.invpi_part())}};
}

PiLinear pilinear_from_json(const Json& j) {
  return PiLinear{rational_from_json(j.at("const")), rational_from_json(j.at("inv_pi"))};
}

Json moves_to_json(const MoveSet& m) { return Json::array({m.lo(), m.hi()}); }

MoveSet moves_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("moves must be [a, b]");
  return MoveSet{j[0].get<int>(), j[1].get<int>()};
}

Json passage_table_to_json(const PassageTable& t) {
  Json r = Json::array();
  Json q = Json::array();
  for (int k = 0; k <= t.K(); ++k) {
    r.push_back(to_string(k == 0 ? Rational{0} : t.r(k)));
    q.push_back(to_string(t.q(k)));
  }
  return Json{{"moves", moves_to_json(t.spec().moves)}, {"n", t.spec().n}, {"K", t.K()},
              {"r", std::move(r)}, {"q", std::move(q)}};
}

PassageTable passage_table_from_json(const Json& j) {
  GameSpec spec{moves_from_json(j.at("moves")), j.at("n").get<int>()};
  std::vector<Rational> r;
  std::vector<Rational> q;
  for (const auto& v : j.at("r")) r.push_back(rational_from_json(v));
  for (const auto& v : j.at("q")) q.push_back(rational_from_json(v));
  if (static_cast<int>(q.size()) != j.at("K").get<int>() + 1 || r.size() != q.size()) {
    throw std::invalid_argument("passage table: r and q must have K+1 entries");
  }
  return PassageTable{spec, std::move(r), std::move(q)};
}

std::string passage_table_csv(const PassageTable& t) {
  std::ostringstream os;
  os << "k,r,q,r_decimal,q_decimal\n";
  for (int k = 0; k <= t.K(); ++k) {
    const Rational r = k == 0 ? Rational{0} : t.r(k);
    os << k << ',' << to_string(r) << ',' << to_string(t.q(k)) << ','
       << decimal_string(to_decimal(r), 15) << ',' << decimal_string(to_decimal(t.q(k)), 15)
       << '\n';
  }
  return os.str();
}

namespace {

Json finite_or_null(const Decimal& x) {
  if (boost::multiprecision::isinf(x) || boost::multiprecision::isnan(x)) return nullptr;
  return decimal_string(x);
}

Json double_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

}  // namespace

Json series_result_to_json(const SeriesResult& s) {
  Json j{{"verdict", to_string(s.verdict)},
         {"method", to_string(s.method)},
         {"value", decimal_string(s.value)},
         {"value_guaranteed", s.verdict == Verdict::converged ? Json(s.approx().to_string()) : Json()},
         {"error_bound", finite_or_null(s.error_bound)},
         {"tail_estimate", finite_or_null(s.tail_estimate)},
         {"truncation_K", s.truncation_K},
         {"last_term", decimal_string(s.last_term)}};
  j["fitted_ratio"] = s.fitted_ratio ? double_or_null(*s.fitted_ratio) : Json();
  j["fitted_exponent"] = s.fitted_exponent ? double_or_null(*s.fitted_exponent) : Json();
  j["no_winner"] = s.no_winner ? Json(decimal_string(*s.no_winner)) : Json();
  j["exact_value"] = s.exact_value ? rational_to_json(*s.exact_value) : Json();
  if (!s.witness.empty()) j["witness"] = s.witness;
  return j;
}

Json sim_report_to_json(const SimReport& r) {
  const auto& c = r.counts;
  Json counts{{"trials", c.trials},
              {"p1_wins", c.p1_wins},
              {"p2_wins", c.p2_wins},
              {"censored", c.censored}};
  if (r.config.within_k) counts["p2_wins_within"] = c.p2_wins_within;

  Json rates{{"p1_win_rate", r.p1_win_rate},
             {"p2_win_rate", r.p2_win_rate},
             {"censored_rate", r.censored_rate},
             {"mean_duration_uncensored", double_or_null(r.mean_duration_uncensored)}};
  Json se{{"p1_win_rate", r.p1_win_se},
          {"p2_win_rate", r.p2_win_se},
          {"censored_rate", r.censored_se},
          {"mean_duration_uncensored", double_or_null(r.mean_duration_se)}};
  if (r.p2_within_rate) {
    rates["p2_within_rate"] = *r.p2_within_rate;
    se["p2_within_rate"] = *r.p2_within_se;
  }

  Json config{{"moves", moves_to_json(r.config.moves)},
              {"n1", r.config.n1},
              {"n2", r.config.n2},
              {"trials", r.config.trials},
              {"seed", r.config.seed},
              {"max_moves_per_game", r.horizon}};
  if (r.config.within_k) config["within_k"] = *r.config.within_k;

  return Json{{"config", std::move(config)},
              {"counts", std::move(counts)},
              {"estimates", std::move(rates)},
              {"standard_errors", std::move(se)}};
}

}  // namespace twopile
