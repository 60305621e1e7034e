#include "commands.hpp"

#include <doctest.h>

using namespace twopile;
using namespace twopile::cli;

namespace {

SeriesOptions opts(int a, int b) {
  SeriesOptions o;
  o.moves = MoveSet{a, b};
  return o;
}

}  // namespace

TEST_CASE("json round trip renders the same text") {
  for (const OutputRecord& rec :
       {cmd_pn(opts(-1, 2), 1), cmd_pmn(opts(-1, 1), 2, 3), cmd_within(opts(-1, 1), 1, 5), cmd_passage(opts(-1, 2), 2, 6)}) {
    const OutputRecord back = OutputRecord::from_json(Json::parse(rec.to_json().dump()));
    CHECK(back.to_text() == rec.to_text());
    CHECK(back.to_csv() == rec.to_csv());
    CHECK(back.exit_code == rec.exit_code);
  }
}

TEST_CASE("within reports the exact partial sum") {
  const OutputRecord rec = cmd_within(opts(-1, 1), 1, 1);
  REQUIRE(rec.rows.size() == 1);
  CHECK(rec.rows[0][1] == "1/4");
  CHECK(rec.exit_code == kOk);
}

TEST_CASE("duration exit codes") {
  const OutputRecord det = cmd_duration(opts(1, 1), 4);
  CHECK(det.exit_code == kOk);
  CHECK(det.rows[0].back() == "converged");

  const OutputRecord heavy = cmd_duration(opts(-1, 1), 1);
  CHECK(heavy.exit_code == kOk);
  CHECK(heavy.rows[0].back() == "diverged");
}

TEST_CASE("truncation limit too small gives exit code 2") {
  SeriesOptions o = opts(-1, 1);
  o.max_k = 16;
  CHECK(cmd_pn(o, 3).exit_code == kNotConverged);
}

TEST_CASE("csv quotes cells with commas") {
  OutputRecord r;
  r.columns = {"a", "b"};
  r.rows = {{"x,y", "say \"hi\""}};
  CHECK(r.to_csv() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("json carries the full series result") {
  const Json j = cmd_pn(opts(-1, 2), 1).to_json();
  REQUIRE(j.at("data").contains("theorem1"));
  const Json& t1 = j.at("data").at("theorem1");
  CHECK(t1.at("verdict") == "converged");
  CHECK(t1.at("method") == "theorem1");
  CHECK(t1.at("tail_estimate").is_string());
}
