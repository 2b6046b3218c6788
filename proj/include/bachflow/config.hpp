#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bachflow/catalog.hpp"
#include "bachflow/flow.hpp"
#include "bachflow/metric.hpp"

namespace bachflow {

enum class Command { catalog, bach, classify, verify, flow, table1 };
enum class OutputFormat { json, csv, table };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);

struct RunConfig {
  Command command = Command::catalog;
  /// Every catalog tag when --geometry all.
  std::vector<GeometryId> geometries;
  bool all_geometries = false;
  bool exact = false;
  /// Set when a metric was given. The float copy is always filled; the exact
  /// copy only when every coefficient is a p/q literal.
  std::optional<DiagonalMetric<double>> metric;
  std::optional<DiagonalMetric<Rational>> exact_metric;
  OutputFormat format = OutputFormat::table;
  FlowOptions flow;
  double t_max = 0.0;
  std::string output_path;
  /// Non-empty when --help was requested; nothing else is meaningful then.
  std::string help_text;
};

/// Parses "g00,g11,g22,g33". Exact mode accepts only p/q literals; float mode
/// also accepts decimals. Throws UsageError on malformed or non-positive input.
DiagonalMetric<Rational> parse_exact_metric(const std::string& text);
DiagonalMetric<double> parse_float_metric(const std::string& text);

/// Command line, optionally layered over a JSON config file given with
/// --config. Flags override file values. Throws UsageError.
RunConfig parse_config(int argc, const char* const* argv);

}  // namespace bachflow
