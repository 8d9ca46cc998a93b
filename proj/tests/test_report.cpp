#include "doctest.h"
#include "dynorb/expression.hpp"
#include "dynorb/report.hpp"

using namespace dynorb;

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_field("") == "");
}

TEST_CASE("csv header, line endings and cells") {
  Table t{"demo", 3, {"k", "v"}, {{1, "x,y"}, {2, true}}};
  CHECK(to_csv(t) == "# dynorb-demo v3\r\nk,v\r\n1,\"x,y\"\r\n2,true\r\n");
}

TEST_CASE("json keeps column order") {
  Table t{"demo", 1, {"zeta", "alpha"}, {{1, 2}}};
  CHECK(to_json(t).dump() == R"({"schema":"demo","version":1,"rows":[{"zeta":1,"alpha":2}]})");
}

TEST_CASE("orbit report") {
  const auto map = to_map(parse_family("x^2-2"));
  const auto rec = scan_orbit(map, parse_point("0"), SIntSpec(), {});
  const Json j = orbit_json(format_map(map), rec);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "version", "map", "points", "integral_indices", "cycle",
                                         "truncation", "count", "exact"});
  CHECK(j["points"] == Json::array({"0", "-2", "2"}));
  CHECK(j["cycle"]["period"] == 1);
  CHECK(j["count"] == 3);
  CHECK(j["exact"] == true);
  const Table t = orbit_table(rec);
  CHECK(t.rows.size() == 3);
  CHECK(to_csv(t) == to_csv(orbit_table(scan_orbit(map, parse_point("0"), SIntSpec(), {}))));
}

TEST_CASE("density report is deterministic across worker counts") {
  const auto map = to_map(parse_family("(x-1)/(x^3+1)"));
  const auto a = density_of_integral_preimages(map, SIntSpec(), {5, 10}, 1);
  const auto b = density_of_integral_preimages(map, SIntSpec(), {5, 10}, 3);
  CHECK(to_csv(density_table(a)) == to_csv(density_table(b)));
  CHECK(to_json(density_table(a)).dump() == to_json(density_table(b)).dump());
}
