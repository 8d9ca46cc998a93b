#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dynorb/families.hpp"
#include "dynorb/function_field.hpp"
#include "dynorb/orbit.hpp"
#include "dynorb/verification.hpp"

namespace dynorb {

using Json = nlohmann::ordered_json;

// A frozen column schema; CSV output starts with "# dynorb-<schema> v<version>".
struct Table {
  std::string schema;
  int version = 1;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // scalar cells
};

std::string csv_field(std::string_view s);  // RFC 4180 quoting when needed
std::string to_csv(const Table& table);
// {"schema", "version", "rows": [{column: value, ...}]}
Json to_json(const Table& table);

Table orbit_table(const OrbitRecord& rec);
Json orbit_json(const std::string& map, const OrbitRecord& rec);
Table density_table(const DensityReport& rep);
Table avg_table(const AvgReport& rep);
Table avg3_table(const ThreeParamReport& rep);
Table verification_table(const VerificationReport& rep);

}  // namespace dynorb
