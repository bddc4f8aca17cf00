#include "besselpow/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "besselpow/serialize.hpp"
#include "besselpow/verify.hpp"
#include "besselpow/zeta.hpp"

namespace besselpow {

namespace {

FieldValue field_of(const std::optional<Rational>& nu) {
  return nu ? FieldValue(*nu) : FieldValue::symbolic_nu();
}

void require_no_pole(const std::optional<Rational>& nu) {
  if (nu && is_integer(*nu) && *nu <= -1) {
    throw ConfigError("--nu: pole at nu = " + to_string(*nu));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += ',';
    out += csv_field(f);
  }
  return out + "\n";
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void no_bfile(const CliConfig& config, const char* command) {
  if (config.format == OutputFormat::Bfile) {
    throw ConfigError(std::string("--format: bfile is not available for ") + command);
  }
}

}  // namespace

std::optional<Rational> parse_nu_flag(const std::string& flag, const std::string& text) {
  if (text == "sym") return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError(flag + ": expected \"sym\" or an exact rational, got '" + text + "'");
  }
}

unsigned parse_count_flag(const std::string& flag, const std::string& text, unsigned min) {
  bool digits = !text.empty() && text.size() <= 9 &&
                std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  unsigned v = digits ? static_cast<unsigned>(std::stoul(text)) : 0;
  if (!digits || v < min) {
    throw ConfigError(flag + ": expected an integer >= " + std::to_string(min) + ", got '" +
                      text + "'");
  }
  return v;
}

std::vector<RouteId> parse_routes_flag(const std::string& text) {
  if (text == "all") return agreeing_routes();
  std::vector<RouteId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto id = parse_route(item);
    if (!id) throw ConfigError("--routes: unknown route '" + item + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  if (out.empty()) throw ConfigError("--routes: no route given");
  return out;
}

OutputFormat parse_format_flag(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "bfile") return OutputFormat::Bfile;
  throw ConfigError("--format: expected json, csv or bfile, got '" + text + "'");
}

CommandResult cmd_zeta(const CliConfig& config) {
  no_bfile(config, "zeta");
  require_no_pole(config.nu);
  const FieldValue nu = field_of(config.nu);
  ZetaTable table(nu);
  auto series = zeta_from_series_all(nu, config.max_n);

  CommandResult res;
  bool all_agree = true;
  Json values = Json::object();
  std::string csv = csv_row({"2n", "recurrence", "series", "agree"});
  for (unsigned n = 1; n <= config.max_n; ++n) {
    const FieldValue& rec = table.get(n);
    const FieldValue& ser = series[n - 1];
    const bool agree = rec == ser;
    all_agree = all_agree && agree;
    Json row = Json::object();
    row["recurrence"] = to_json(rec);
    row["series"] = to_json(ser);
    row["agree"] = agree;
    row["display"] = rec.to_string();
    values[std::to_string(2 * n)] = std::move(row);
    csv += csv_row({std::to_string(2 * n), rec.to_string(), ser.to_string(),
                    agree ? "true" : "false"});
  }
  if (config.format == OutputFormat::Csv) {
    res.out = csv;
  } else {
    Json out = Json::object();
    out["command"] = "zeta";
    out["nu"] = nu_label(config.nu);
    out["max_n"] = config.max_n;
    out["values"] = std::move(values);
    out["all_agree"] = all_agree;
    res.out = render(out);
  }
  if (!all_agree) {
    res.exit_code = kExitFailure;
    res.err = "zeta: recurrence and series routes disagree\n";
  }
  return res;
}

CommandResult cmd_bpoly(const CliConfig& config) {
  no_bfile(config, "bpoly");
  require_no_pole(config.nu);
  const FieldValue nu = field_of(config.nu);
  const unsigned n_max = config.max_n;
  const auto reference = b_via_series(nu, n_max);

  auto value_json = [&](const RPoly& p) -> std::pair<Json, std::string> {
    if (!config.r) return {to_json(p), p.to_string()};
    FieldValue v = p(nu.constant(*config.r));
    return {to_json(v), v.to_string()};
  };
  auto same = [&](const RPoly& a, const RPoly& b) {
    if (!config.r) return a == b;
    return a(nu.constant(*config.r)) == b(nu.constant(*config.r));
  };

  CommandResult res;
  bool any_fail = false;
  Json rows = Json::array();
  std::string csv = config.tilde ? csv_row({"n", "route", "value", "tilde", "status"})
                                 : csv_row({"n", "route", "value", "status"});
  for (RouteId route : config.routes) {
    const auto polys = route == RouteId::SeriesEuler ? reference : b_polys(route, nu, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
      std::string status = "pass";
      if (!same(polys[n], reference[n])) {
        if (route == RouteId::BenderAsPrinted) {
          status = std::string(status_name(CheckStatus::ExpectedDiscrepancy));
        } else {
          status = "fail";
          any_fail = true;
        }
      }
      auto [value, display] = value_json(polys[n]);
      Json row = Json::object();
      row["n"] = n;
      row["route"] = std::string(route_name(route));
      row["value"] = std::move(value);
      row["display"] = display;
      std::string tilde_display;
      if (config.tilde) {
        auto [tv, td] = value_json(normalize_tilde(polys[n], nu, n));
        row["tilde"] = std::move(tv);
        row["tilde_display"] = td;
        tilde_display = td;
      }
      row["status"] = status;
      if (status == status_name(CheckStatus::ExpectedDiscrepancy)) {
        row["discrepancy_id"] = std::string(kBenderBdef);
      }
      rows.push_back(std::move(row));
      csv += config.tilde ? csv_row({std::to_string(n), std::string(route_name(route)), display,
                                     tilde_display, status})
                          : csv_row({std::to_string(n), std::string(route_name(route)), display,
                                     status});
    }
  }
  if (config.format == OutputFormat::Csv) {
    res.out = csv;
  } else {
    Json out = Json::object();
    out["command"] = "bpoly";
    out["nu"] = nu_label(config.nu);
    out["r"] = nu_label(config.r);
    out["max_n"] = n_max;
    out["tilde"] = config.tilde;
    Json routes = Json::array();
    for (RouteId route : config.routes) routes.push_back(std::string(route_name(route)));
    out["routes"] = std::move(routes);
    out["rows"] = std::move(rows);
    out["all_agree"] = !any_fail;
    res.out = render(out);
  }
  if (any_fail) {
    res.exit_code = kExitFailure;
    res.err = "bpoly: routes disagree with the series oracle\n";
  }
  return res;
}

CommandResult cmd_verify(const CliConfig& config) {
  no_bfile(config, "verify");
  VerifyConfig vc;
  if (!config.verify_nus.empty()) vc.nus = config.verify_nus;
  for (const auto& nu : vc.nus) require_no_pole(nu);
  vc.max_n = config.max_n;
  vc.flip_zeta_sign = config.mutate_zeta_sign;
  VerifyReport report = run_verify(vc);

  CommandResult res;
  if (config.format == OutputFormat::Csv) {
    res.out = csv_row({"check_id", "parameters", "status", "discrepancy_id", "detail"});
    for (const auto& r : report.runs) {
      res.out += csv_row({r.check_id, r.parameters.dump(), std::string(status_name(r.status)),
                          r.discrepancy_id, r.detail});
    }
  } else {
    res.out = render(report.to_json());
  }
  if (const CheckResult* bad = report.first_failure()) {
    res.exit_code = kExitFailure;
    res.err = "verify: " + std::to_string(report.count(CheckStatus::Fail)) +
              " check(s) failed; first counterexample:\n  " + bad->check_id + " " +
              bad->parameters.dump() + ": " + bad->detail + "\n";
  }
  return res;
}

CommandResult cmd_seq(const CliConfig& config) {
  require_no_pole(config.nu);
  if (!config.nu && (config.seq == SeqName::BTilde || config.format == OutputFormat::Bfile)) {
    throw ConfigError("--nu: this output needs a concrete nu");
  }
  if (config.seq == SeqName::BTilde && !(is_integer(*config.nu) && *config.nu >= 0)) {
    throw ConfigError("--nu: b_tilde needs a natural number nu, got " + to_string(*config.nu));
  }
  const FieldValue nu = field_of(config.nu);
  auto records = sequence_records(config.seq, config.max_n, nu);

  CommandResult res;
  if (config.format == OutputFormat::Bfile) {
    res.out = to_bfile(records);
  } else if (config.format == OutputFormat::Csv) {
    res.out = csv_row({"n", "value", "integral"});
    for (const auto& rec : records) {
      res.out += csv_row({std::to_string(rec.index), rec.value.to_string(),
                          rec.integral ? "true" : "false"});
    }
  } else {
    Json out = Json::object();
    out["command"] = "seq";
    out["name"] = std::string(seq_name(config.seq));
    out["nu"] = nu_label(config.nu);
    out["max"] = config.max_n;
    Json rows = Json::array();
    for (const auto& rec : records) {
      Json row = Json::object();
      row["n"] = rec.index;
      row["value"] = to_json(rec.value);
      row["integral"] = rec.integral;
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    res.out = render(out);
  }
  return res;
}

CommandResult cmd_walk(const CliConfig& config) {
  const unsigned max_sigma = config.max_n;
  const FieldValue zero_nu(Rational(0));
  const auto alt = b_via_binomial_recurrence(zero_nu, max_sigma);
  const FieldValue steps = zero_nu.constant(config.steps);

  CommandResult res;
  bool all_agree = true;
  Json rows = Json::array();
  std::string csv = csv_row({"s", "value", "agree"});
  std::string bfile;
  for (unsigned sigma = 1; sigma <= max_sigma; ++sigma) {
    Rational w = walk_moment(config.steps, 2 * sigma);
    bool agree = alt[sigma](steps) == FieldValue(w);
    all_agree = all_agree && agree;
    Json row = Json::object();
    row["s"] = 2 * sigma;
    row["value"] = to_string(w);
    row["agree"] = agree;
    rows.push_back(std::move(row));
    csv += csv_row({std::to_string(2 * sigma), to_string(w), agree ? "true" : "false"});
    bfile += std::to_string(2 * sigma) + " " + to_string(w) + "\n";
  }
  if (config.format == OutputFormat::Bfile) {
    res.out = bfile;
  } else if (config.format == OutputFormat::Csv) {
    res.out = csv;
  } else {
    Json out = Json::object();
    out["command"] = "walk";
    out["n"] = config.steps;
    out["max_s"] = max_sigma;
    out["rows"] = std::move(rows);
    out["all_agree"] = all_agree;
    res.out = render(out);
  }
  if (!all_agree) {
    res.exit_code = kExitFailure;
    res.err = "walk: series route and binomial disagree\n";
  }
  return res;
}

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact B_n^(nu)(r) polynomials, Bessel zeta values and related sequences",
               "besselpow"};
  app.require_subcommand(1);
  std::string nu = "sym", r = "sym", max_n, routes = "all", format = "json", output, mutate,
              seq_name_text, steps;
  bool tilde = false, bfile = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, csv or bfile");
    sub->add_option("--output", output, "Write the payload to this file");
  };
  auto* zeta = app.add_subcommand("zeta", "Bessel zeta values zeta_nu(2n), both routes");
  zeta->add_option("--nu", nu, "sym or an exact rational");
  zeta->add_option("--max-n", max_n, "Largest n (default 4)");
  add_common(zeta);

  auto* bpoly = app.add_subcommand("bpoly", "The polynomials B_n(r) on the requested routes");
  bpoly->add_option("--nu", nu, "sym or an exact rational");
  bpoly->add_option("--r", r, "sym or an exact rational");
  bpoly->add_option("--max-n", max_n, "Largest n (default 4)");
  bpoly->add_option("--routes", routes, "Comma list of series,bell,pochhammer,step,binomial,bender or all");
  bpoly->add_flag("--tilde", tilde, "Also emit the normalized polynomials");
  add_common(bpoly);

  auto* verify = app.add_subcommand("verify", "Run the cross-verification harness");
  verify->add_option("--nu", nu, "Comma list of sym / rationals (default sym,0,1,1/2,5/3)");
  verify->add_option("--max-n", max_n, "Depth (default 8)");
  verify->add_option("--mutate", mutate, "Deliberately corrupt a recurrence: zeta-sign");
  add_common(verify);

  auto* seq = app.add_subcommand("seq", "Integer sequences M, a_tilde, b_nu, b_tilde");
  seq->add_option("name", seq_name_text, "M, a_tilde, b_nu or b_tilde")->required();
  seq->add_option("--max", max_n, "Largest index (default 10)");
  seq->add_option("--nu", nu, "nu for b_nu / b_tilde (default 0)");
  seq->add_flag("--bfile", bfile, "Same as --format bfile");
  add_common(seq);

  auto* walk = app.add_subcommand("walk", "Even moments W_n(2s) of planar unit-step walks");
  walk->add_option("--n", steps, "Number of steps")->required();
  walk->add_option("--max-s", max_n, "Largest s; prints W_n(2), ..., W_n(2 max_s) (default 4)");
  add_common(walk);

  CommandResult res;
  std::ostringstream out, err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    res.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  try {
    CliConfig config;
    config.format = parse_format_flag(format);
    config.output = output;
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    auto count_or = [&](const char* flag, unsigned dflt) {
      return max_n.empty() ? dflt : parse_count_flag(flag, max_n);
    };
    if (name == "zeta") {
      config.nu = parse_nu_flag("--nu", nu);
      config.max_n = count_or("--max-n", 4);
      res = cmd_zeta(config);
    } else if (name == "bpoly") {
      config.nu = parse_nu_flag("--nu", nu);
      config.r = parse_nu_flag("--r", r);
      config.max_n = count_or("--max-n", 4);
      config.routes = parse_routes_flag(routes);
      config.tilde = tilde;
      res = cmd_bpoly(config);
    } else if (name == "verify") {
      if (verify->count("--nu") > 0) {
        std::stringstream ss(nu);
        std::string item;
        while (std::getline(ss, item, ',')) config.verify_nus.push_back(parse_nu_flag("--nu", item));
        if (config.verify_nus.empty()) throw ConfigError("--nu: empty list");
      }
      config.max_n = count_or("--max-n", 8);
      if (!mutate.empty() && mutate != "zeta-sign") {
        throw ConfigError("--mutate: only zeta-sign is supported, got '" + mutate + "'");
      }
      config.mutate_zeta_sign = mutate == "zeta-sign";
      res = cmd_verify(config);
    } else if (name == "seq") {
      try {
        config.seq = parse_seq_name(seq_name_text);
      } catch (const std::invalid_argument&) {
        throw ConfigError("name: unknown sequence '" + seq_name_text +
                          "' (expected M, a_tilde, b_nu or b_tilde)");
      }
      config.nu = parse_nu_flag("--nu", seq->count("--nu") > 0 ? nu : std::string("0"));
      config.max_n = count_or("--max", 10);
      if (bfile) config.format = OutputFormat::Bfile;
      res = cmd_seq(config);
    } else {
      config.steps = parse_count_flag("--n", steps);
      config.max_n = count_or("--max-s", 4);
      res = cmd_walk(config);
    }
  } catch (const ConfigError& e) {
    res = CommandResult{kExitConfig, "", std::string("error: ") + e.what() + "\n"};
    return res;
  } catch (const std::exception& e) {
    res = CommandResult{kExitFailure, "", std::string("error: ") + e.what() + "\n"};
    return res;
  }

  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      return CommandResult{kExitConfig, "", "error: --output: cannot open '" + output + "'\n"};
    }
    file << res.out;
    res.out.clear();
  }
  return res;
}

}  // namespace besselpow
