#pragma once

#include <string>
#include <vector>

#include "bachflow/json_io.hpp"
#include "bachflow/soliton.hpp"

namespace bachflow {

/// One row of the summary table: the printed cells next to what the engine
/// computes for the same geometry.
struct Table1Row {
  GeometryId geometry = GeometryId::r_x_r3;
  std::string split;
  std::string manifold;
  std::string printed_type;
  std::string printed_metrics;
  std::string printed_potential;
  /// "Type: metrics; Type: metrics", or "None".
  std::string expected;
  std::string computed;
  std::vector<std::string> diffs;
  bool ok = false;
};

/// Rows with no computation behind them (non-split N^4).
struct ConstantEntry {
  std::string split;
  std::string printed_type;
  std::string printed_metrics;
  std::string printed_potential;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  std::vector<ConstantEntry> constant_entries;
  bool ok = false;
};

Table1Report run_table1_report();

/// Fixed-width text table; byte-stable across runs.
std::string render_table(const Table1Report& report);
Json to_json(const Table1Report& report);

/// One-line summary of a classification, in the `expected` format.
std::string summarize(const ClassificationEntry& entry);

}  // namespace bachflow
