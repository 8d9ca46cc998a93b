#include "dynorb/report.hpp"

#include <algorithm>

namespace dynorb {

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const Table& table) {
  std::string out = "# dynorb-" + table.schema + " v" + std::to_string(table.version) + "\r\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\r\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(cell_text(v));
    line(cells);
  }
  return out;
}

Json to_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return Json{{"schema", table.schema}, {"version", table.version}, {"rows", std::move(rows)}};
}

Table orbit_table(const OrbitRecord& rec) {
  Table t{"orbit", 1, {"index", "point", "s_integral", "bits"}, {}};
  for (std::size_t i = 0; i < rec.points.size(); ++i) {
    const bool integral =
        std::find(rec.integral_indices.begin(), rec.integral_indices.end(), i) != rec.integral_indices.end();
    const auto& p = rec.points[i];
    t.rows.push_back({i, format_point(p), integral, std::max(bit_length(p.a()), bit_length(p.b()))});
  }
  return t;
}

Json orbit_json(const std::string& map, const OrbitRecord& rec) {
  Json points = Json::array();
  for (const auto& p : rec.points) points.push_back(format_point(p));
  const auto count = count_s_integral(rec);
  Json cycle = nullptr;
  if (rec.cycle) cycle = Json{{"index", rec.cycle->index}, {"period", rec.cycle->period}};
  return Json{{"schema", "orbit"},
              {"version", 1},
              {"map", map},
              {"points", std::move(points)},
              {"integral_indices", rec.integral_indices},
              {"cycle", std::move(cycle)},
              {"truncation", std::string(truncation_name(rec.truncation))},
              {"count", count.count},
              {"exact", count.exact}};
}

Table density_table(const DensityReport& rep) {
  Table t{"density", 1, {"B", "hits", "total", "ratio", "trap_checked", "trap_violations"}, {}};
  for (std::size_t i = 0; i < rep.b_values.size(); ++i)
    t.rows.push_back({rep.b_values[i], rep.hits[i], to_string(rep.totals[i]), rep.ratios[i], rep.trap_checked,
                      rep.trap_violations});
  return t;
}

Table avg_table(const AvgReport& rep) {
  Table t{"avg", 1, {"B", "population", "excluded", "total", "truncated", "truncated_fraction", "average"}, {}};
  for (const auto& r : rep.rows) {
    const double frac = r.population ? static_cast<double>(r.truncated) / static_cast<double>(r.population) : 0.0;
    t.rows.push_back({r.b, r.population, r.excluded, r.total, r.truncated, frac, r.average});
  }
  return t;
}

Table avg3_table(const ThreeParamReport& rep) {
  Table t{"avg3", 1, {"B", "n1", "n2", "n3", "boxes", "total", "average", "slice", "points", "slice_total",
                      "max_count", "violations", "truncated"}, {}};
  for (const auto& r : rep.rows) {
    const std::pair<const char*, const SliceTally*> slices[] = {{"t0", &r.t0}, {"s0", &r.s0}, {"r0", &r.r0}, {"open", &r.open}};
    for (const auto& [name, s] : slices)
      t.rows.push_back({r.b, rep.n1, rep.n2, rep.n3, r.boxes, r.total, r.average, name, s->points, s->total,
                        s->max_count, s->violations, s->truncated});
  }
  return t;
}

Table verification_table(const VerificationReport& rep) {
  Table t{"verify", 1, {"check", "status", "detail"}, {}};
  for (const auto& c : rep.checks) t.rows.push_back({c.name, c.ok ? "ok" : "FAIL", c.detail});
  return t;
}

}  // namespace dynorb
