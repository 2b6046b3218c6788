#include "bachflow/config.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace bachflow {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::catalog:
      return "catalog";
    case Command::bach:
      return "bach";
    case Command::classify:
      return "classify";
    case Command::verify:
      return "verify";
    case Command::flow:
      return "flow";
    case Command::table1:
      return "table1";
  }
  return "catalog";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::table:
      return "table";
  }
  return "table";
}

namespace {

std::vector<std::string> split_metric(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4 || text.empty() || text.back() == ',')
    throw UsageError("--metric needs four comma-separated coefficients g00,g11,g22,g33");
  return parts;
}

double parse_decimal(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_double(parse_rational(s));
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

DiagonalMetric<Rational> parse_exact_metric(const std::string& text) {
  const auto parts = split_metric(text);
  DiagonalMetric<Rational> g;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      g[i] = parse_rational(parts[i]);
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed rational '" + parts[i] + "' (exact mode accepts p or p/q)");
    }
    if (!(g[i] > 0)) throw UsageError("metric coefficient '" + parts[i] + "' must be positive");
  }
  return g;
}

DiagonalMetric<double> parse_float_metric(const std::string& text) {
  const auto parts = split_metric(text);
  DiagonalMetric<double> g;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      g[i] = parse_decimal(parts[i]);
    } catch (const std::exception&) {
      throw UsageError("malformed number '" + parts[i] + "'");
    }
    if (!(g[i] > 0) || !std::isfinite(g[i]))
      throw UsageError("metric coefficient '" + parts[i] + "' must be positive");
  }
  return g;
}

RunConfig parse_config(int argc, const char* const* argv) {
  CLI::App app{"Bach tensors, gradient Bach solitons and Bach flow on homogeneous product 4-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string output_path;
  app.add_option("--config", config_path, "JSON file with default option values");
  app.add_option("--output,-o", output_path, "Write output to this file instead of stdout");

  std::string geometry;
  std::string metric;
  bool exact = false;
  std::string format;
  double t_max = 0.0;
  double dt = 0.0;
  bool adaptive = false;
  double rtol = 0.0;
  double atol = 0.0;
  std::string emit;

  auto* catalog = app.add_subcommand("catalog", "List catalog geometries as JSON lines");
  auto* bach = app.add_subcommand("bach", "Evaluate the Bach tensor at a metric");
  auto* classify = app.add_subcommand("classify", "Classify gradient Bach solitons");
  auto* verify = app.add_subcommand("verify", "Soliton certificate for one metric");
  auto* flow = app.add_subcommand("flow", "Integrate the Bach flow");
  auto* table1 = app.add_subcommand("table1", "Reproduce the summary table");

  std::vector<CLI::Option*> geometry_opts, metric_opts, exact_opts, format_opts;
  for (auto* sub : {bach, verify, flow}) {
    geometry_opts.push_back(sub->add_option("--geometry,-g", geometry, "Catalog tag"));
    metric_opts.push_back(sub->add_option("--metric,-m", metric, "g00,g11,g22,g33"));
  }
  for (auto* sub : {bach, verify}) exact_opts.push_back(sub->add_flag("--exact", exact, "Exact rational arithmetic"));
  geometry_opts.push_back(classify->add_option("--geometry,-g", geometry, "Catalog tag or 'all'"));
  format_opts.push_back(
      classify->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"})));
  format_opts.push_back(table1->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"})));
  auto* t_max_opt = flow->add_option("--t-max", t_max, "Final time");
  auto* dt_opt = flow->add_option("--dt", dt, "Fixed rk4 step");
  auto* adaptive_opt = flow->add_flag("--adaptive", adaptive, "Adaptive Dormand-Prince 4(5)");
  dt_opt->excludes(adaptive_opt);
  auto* rtol_opt = flow->add_option("--rtol", rtol, "Relative tolerance (adaptive)");
  auto* atol_opt = flow->add_option("--atol", atol, "Absolute tolerance (adaptive)");
  auto* emit_opt = flow->add_option("--emit", emit, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  (void)catalog;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    RunConfig cfg;
    std::ostringstream os;
    app.exit(e, os, os);
    cfg.help_text = os.str();
    if (cfg.help_text.empty()) cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  auto given = [](const std::vector<CLI::Option*>& opts) {
    for (auto* o : opts)
      if (o->count() > 0) return true;
    return false;
  };

  // Config-file values fill in whatever the command line left unset.
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot open config file '" + config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed config file: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    try {
      if (j.contains("geometry") && !given(geometry_opts)) geometry = j["geometry"].get<std::string>();
      if (j.contains("metric") && !given(metric_opts)) {
        const auto& mj = j["metric"];
        metric = mj.is_string() ? mj.get<std::string>() : std::string();
        if (mj.is_array()) {
          for (std::size_t i = 0; i < mj.size(); ++i)
            metric += (i ? "," : "") + (mj[i].is_string() ? mj[i].get<std::string>() : mj[i].dump());
        }
      }
      if (j.contains("exact") && !given(exact_opts)) exact = j["exact"].get<bool>();
      if (j.contains("format") && !given(format_opts)) format = j["format"].get<std::string>();
      if (j.contains("t_max") && t_max_opt->count() == 0) t_max = j["t_max"].get<double>();
      if (j.contains("dt") && dt_opt->count() == 0 && adaptive_opt->count() == 0) dt = j["dt"].get<double>();
      if (j.contains("adaptive") && adaptive_opt->count() == 0 && dt_opt->count() == 0)
        adaptive = j["adaptive"].get<bool>();
      if (j.contains("rtol") && rtol_opt->count() == 0) rtol = j["rtol"].get<double>();
      if (j.contains("atol") && atol_opt->count() == 0) atol = j["atol"].get<double>();
      if (j.contains("emit") && emit_opt->count() == 0) emit = j["emit"].get<std::string>();
      if (j.contains("output") && output_path.empty()) output_path = j["output"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("bad config value: ") + e.what());
    }
  }

  RunConfig cfg;
  cfg.output_path = output_path;
  cfg.exact = exact;
  if (*catalog) cfg.command = Command::catalog;
  if (*bach) cfg.command = Command::bach;
  if (*classify) cfg.command = Command::classify;
  if (*verify) cfg.command = Command::verify;
  if (*flow) cfg.command = Command::flow;
  if (*table1) cfg.command = Command::table1;

  const bool needs_geometry = cfg.command == Command::bach || cfg.command == Command::verify || cfg.command == Command::flow;
  if (cfg.command == Command::classify && (geometry.empty() || geometry == "all")) {
    cfg.all_geometries = true;
    cfg.geometries.assign(kAllGeometries.begin(), kAllGeometries.end());
  } else if (!geometry.empty()) {
    try {
      cfg.geometries.push_back(parse_geometry(geometry));
    } catch (const CatalogError& e) {
      throw UsageError(e.what());
    }
  } else if (needs_geometry) {
    throw UsageError("--geometry is required");
  }

  if (needs_geometry) {
    if (metric.empty()) throw UsageError("--metric is required");
    if (cfg.exact) {
      cfg.exact_metric = parse_exact_metric(metric);
      cfg.metric = to_double(*cfg.exact_metric);
    } else {
      cfg.metric = parse_float_metric(metric);
      try {
        cfg.exact_metric = parse_exact_metric(metric);
      } catch (const UsageError&) {
        // decimal input: no exact copy
      }
    }
  }

  if (cfg.command == Command::classify || cfg.command == Command::table1)
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::table;
  if (cfg.command == Command::bach || cfg.command == Command::verify || cfg.command == Command::catalog)
    cfg.format = OutputFormat::json;

  if (cfg.command == Command::flow) {
    if (!(t_max > 0)) throw UsageError("--t-max must be positive");
    cfg.t_max = t_max;
    if (dt > 0 && adaptive) throw UsageError("--dt and --adaptive are mutually exclusive");
    if (dt > 0) {
      cfg.flow.method = Integrator::rk4;
      cfg.flow.dt = dt;
    } else if (dt < 0) {
      throw UsageError("--dt must be positive");
    } else {
      cfg.flow.method = Integrator::rk45;
    }
    if (rtol > 0) cfg.flow.rtol = rtol;
    if (atol > 0) cfg.flow.atol = atol;
    cfg.format = emit == "json" ? OutputFormat::json : OutputFormat::csv;
  }
  return cfg;
}

}  // namespace bachflow
