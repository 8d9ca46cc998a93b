#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynorb/canonical_height.hpp"
#include "dynorb/error.hpp"
#include "dynorb/expression.hpp"
#include "dynorb/families.hpp"
#include "dynorb/function_field.hpp"
#include "dynorb/orbit.hpp"
#include "dynorb/report.hpp"
#include "dynorb/verify.hpp"

using namespace dynorb;

namespace {

struct Config {
  std::string map = "phi_t";
  std::string point = "0";
  std::string s;
  unsigned ncap = 16;
  std::size_t budget = 1'000'000;
  std::string b;
  double tol = 1e-9;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::string beta;
  std::string n = "6,6,6";
  int p = 2;
  int d = 2;
};

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, std::string("--") + what + ": not an integer list: " + text);
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, std::string("--") + what + " is required");
  return out;
}

OrbitPolicy policy_of(const Config& c) {
  if (c.ncap == 0 || c.budget == 0) throw Error(ErrorKind::InvalidInput, "--ncap and --budget must be positive");
  return {c.ncap, c.budget};
}

RationalMap single_map(const Config& c) { return to_map(parse_map_or_preset(c.map)); }

struct Output {
  Table table;
  Json extra = Json::object();
  std::optional<Json> json_override;
  bool ok = true;
};

std::string render(const Output& o, const std::string& format) {
  if (format == "csv") return to_csv(o.table);
  Json j = o.json_override ? *o.json_override : to_json(o.table);
  for (auto it = o.extra.begin(); it != o.extra.end(); ++it) j[it.key()] = it.value();
  return j.dump(2) + "\n";
}

Output run(const std::string& cmd, const Config& c) {
  Output o;
  const auto s = [&] { return SIntSpec::parse(c.s); };
  if (cmd == "orbit") {
    const auto map = single_map(c);
    const auto rec = scan_orbit(map, parse_point(c.point), s(), policy_of(c));
    o.table = orbit_table(rec);
    o.json_override = orbit_json(format_map(map), rec);
  } else if (cmd == "canheight") {
    const auto map = single_map(c);
    const auto p = parse_point(c.point);
    const auto e = canonical_height(map, p, c.tol);
    o.table = Table{"canheight", 1, {"map", "point", "value", "radius", "tol", "iterations"},
                    {{format_map(map), format_point(p), e.value, e.radius, c.tol, e.iterations_used}}};
  } else if (cmd == "preper") {
    const auto map = single_map(c);
    const auto p = parse_point(c.point);
    o.table = Table{"preper", 1, {"map", "point", "preperiodic"},
                    {{format_map(map), format_point(p), is_preperiodic(map, p)}}};
  } else if (cmd == "nmax") {
    const auto map = single_map(c);
    const auto bs = parse_list(c.b, "b");
    const auto res = empirical_max_iterate_sweep(map, s(), bs, policy_of(c), c.workers);
    o.table = Table{"nmax", 1, {"B", "n_emp", "witness"}, {}};
    for (std::size_t i = 0; i < bs.size(); ++i)
      o.table.rows.push_back({bs[i], res[i].n_emp, res[i].witness ? format_point(*res[i].witness) : ""});
  } else if (cmd == "density") {
    const auto map = single_map(c);
    const auto rep = density_of_integral_preimages(map, s(), parse_list(c.b, "b"), c.workers);
    o.table = density_table(rep);
    std::vector<double> x(rep.b_values.begin(), rep.b_values.end());
    const double slope = rep.b_values.size() >= 2 ? loglog_slope(x, rep.ratios) : 0.0;
    o.extra = Json{{"map", format_map(map)},
                   {"loglog_slope", std::isfinite(slope) ? Json(slope) : Json(nullptr)},
                   {"trap_applicable", rep.trap_applicable}};
  } else if (cmd == "avg") {
    const auto family = parse_map_or_preset(c.map);
    const auto beta = parse_basepoint(c.beta.empty() ? "t" : c.beta);
    const auto rep = avg_experiment(family, beta, s(), parse_list(c.b, "b"), policy_of(c), c.workers);
    o.table = avg_table(rep);
    o.extra = Json{{"family", format_family(family)}, {"beta", format_basepoint(beta)}};
  } else if (cmd == "avg3") {
    const auto ns = parse_list(c.n, "n");
    if (ns.size() != 3) throw Error(ErrorKind::InvalidInput, "--n expects three exponents");
    const auto rep = three_param_avg(static_cast<int>(ns[0]), static_cast<int>(ns[1]), static_cast<int>(ns[2]),
                                     parse_list(c.b, "b"), policy_of(c), c.workers);
    o.table = avg3_table(rep);
  } else if (cmd == "ffavg") {
    std::vector<FFPoly> places;
    std::stringstream ss(c.s);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) places.push_back(FFPoly::parse(c.p, item));
    const RationalExpr beta = parse_expression(c.beta.empty() ? "f^4" : c.beta);
    if (!beta.den.is_constant() || beta.den.constant_value() != 1)
      throw Error(ErrorKind::InvalidInput, "--beta must be a polynomial in f");
    FFOrbitPolicy pol;
    pol.n_cap = policy_of(c).n_cap;
    const auto rep = ff_orbit_avg(c.p, c.d, beta.num, places, parse_list(c.b, "b"), pol, c.workers);
    o.table = avg_table(rep);
    o.table.schema = "ffavg";
    o.extra = Json{{"p", c.p}, {"d", c.d}, {"beta", format_expression(beta)}};
  } else if (cmd == "verify") {
    const auto rep = run_verify({c.seed, c.workers});
    o.table = verification_table(rep);
    o.ok = rep.ok();
    o.extra = Json{{"ok", o.ok}, {"seed", c.seed}};
  }
  return o;
}

void emit_error(std::string_view kind, const std::string& message, std::optional<std::size_t> position) {
  Json e{{"kind", std::string(kind)}, {"message", message}};
  if (position) e["position"] = *position;
  std::cout << Json{{"error", e}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orbit and integral-point experiments for rational maps of P^1", "dynctl"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key = value file; keys match the long flag names");
  Config c;
  app.add_option("--map", c.map, "map expression or preset: phi_t, three_param, pell(D)");
  app.add_option("--point", c.point, "point a/b, n or inf");
  app.add_option("--s", c.s, "S: comma-separated primes (ffavg: places in t); empty means none");
  app.add_option("--ncap", c.ncap, "orbit iteration cap");
  app.add_option("--budget", c.budget, "orbit height budget in bits");
  app.add_option("--b", c.b, "height bound(s), comma-separated");
  app.add_option("--tol", c.tol, "canonical height tolerance");
  app.add_option("--workers", c.workers, "worker threads (0 = all cores; DYNCTL_WORKERS overrides)");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--seed", c.seed, "seed for sampled checks");
  app.add_option("--beta", c.beta, "basepoint: expression in the parameter (ffavg: in f)");
  app.add_option("--n", c.n, "avg3 exponents n1,n2,n3");
  app.add_option("--p", c.p, "ffavg field characteristic");
  app.add_option("--d", c.d, "ffavg family degree");
  for (const char* name : {"orbit", "canheight", "preper", "nmax", "density", "avg", "avg3", "ffavg", "verify"})
    app.add_subcommand(name)->fallthrough();
  app.get_subcommand("orbit")->description("scan one orbit and count S-integral points");
  app.get_subcommand("canheight")->description("certified canonical height estimate");
  app.get_subcommand("preper")->description("decide preperiodicity");
  app.get_subcommand("nmax")->description("largest S-integral iterate over wandering points");
  app.get_subcommand("density")->description("density of integral preimages");
  app.get_subcommand("avg")->description("orbit-count average over a one-parameter family");
  app.get_subcommand("avg3")->description("boxed average over the 3-parameter family");
  app.get_subcommand("ffavg")->description("function-field family average");
  app.get_subcommand("verify")->description("run every registered identity check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("Usage", e.what(), std::nullopt);
    return 1;
  }
  if (const char* env = std::getenv("DYNCTL_WORKERS")) {
    try {
      c.workers = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      emit_error("InvalidInput", std::string("DYNCTL_WORKERS is not a number: ") + env, std::nullopt);
      return 1;
    }
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Output o = run(cmd, c);
    const std::string text = render(o, c.format);
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + c.out);
      f << text;
    }
    return o.ok ? 0 : 3;
  } catch (const dynorb::ParseError& e) {
    emit_error(error_kind_name(e.kind()), e.what(), e.position());
  } catch (const Error& e) {
    emit_error(error_kind_name(e.kind()), e.what(), std::nullopt);
  } catch (const std::exception& e) {
    emit_error("Internal", e.what(), std::nullopt);
  }
  return 2;
}
