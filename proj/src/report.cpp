#include "bachflow/report.hpp"

#include <algorithm>
#include <sstream>

namespace bachflow {

namespace {

struct PrintedRow {
  GeometryId id;
  const char* split;
  const char* manifold;
  const char* type;
  const char* metrics;
  const char* potential;
  const char* expected;
};

// Cells transcribed from the summary table, with LaTeX markup flattened.
// The R x S^3 row spans two printed lines.
constexpr PrintedRow kPrinted[] = {
    {GeometryId::r4, "N^4", "R^4", "Gaussian", "Bach flat (any)",
     "f(x,y,z,w) = c(x^2+y^2+z^2+w^2)+ax+by+dz+hw+k", "Gaussian: any"},
    {GeometryId::r3_x_n1, "R^3 x N^1", "", "Steady", "Bach flat (any)", "f(x,y,z) = ax+by+dz+k", "Steady: any"},
    {GeometryId::r2_x_r2, "R^2 x N^2", "R^2 x R^2", "Steady", "Bach flat (any)", "f(x,y) = ax+by+d", "Steady: any"},
    {GeometryId::r2_x_s2, "R^2 x N^2", "R^2 x S^2", "Shrinking", "cited externally", "f(x,y) = c(x^2+y^2)+ ax+by+dz+k",
     "Shrinking: g22=g33"},
    {GeometryId::r2_x_h2, "R^2 x N^2", "R^2 x H^2", "Shrinking", "cited externally", "f(x,y) = c(x^2+y^2)+ax+by+dz+k",
     "Shrinking: g22=g33"},
    {GeometryId::r_x_r3, "R x N^3", "R x R^3", "Steady", "Bach flat (any)", "f(x) = ax+b", "Steady: any"},
    {GeometryId::r_x_nil, "R x N^3", "R x Nil", "---", "None", "---", "None"},
    {GeometryId::r_x_solv, "R x N^3", "R x Solv", "---", "None", "---", "None"},
    {GeometryId::r_x_sl2r, "R x N^3", "R x SL(2,R)^", "---", "None", "---", "None"},
    {GeometryId::r_x_rh2, "R x N^3", "R x (R x H^2)", "---", "None", "---", "None"},
    {GeometryId::r_x_rs2, "R x N^3", "R x (R x S^2)", "---", "None", "---", "None"},
    {GeometryId::r_x_e2, "R x N^3", "R x E(2)", "Steady", "Bach flat (g11= g22)", "f(x) = ax+b",
     "Steady: g11=g22"},
    {GeometryId::r_x_h3, "R x N^3", "R x H^3", "Steady", "Bach flat", "f(x) = ax+b", "Steady: any"},
    {GeometryId::r_x_su2, "R x N^3", "R x S^3", "Steady / Expanding",
     "Bach flat (g11 = g22=g33) / g11 = g22=4g33", "f(x) = ax+b / f(x) = 2cx^2+ ax+b",
     "Steady: g11=g22=g33; Expanding: g11=g22=4g33"},
};

std::string capitalized(SolitonType t) {
  std::string s(to_string(t));
  if (!s.empty()) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

std::string summarize(const ClassificationEntry& entry) {
  if (entry.families.empty()) return "None";
  std::string out;
  for (const auto& f : entry.families) {
    if (!out.empty()) out += "; ";
    out += capitalized(f.type) + ": " + f.label;
  }
  return out;
}

Table1Report run_table1_report() {
  Table1Report report;
  const auto entries = classify_all();
  report.ok = true;
  for (const auto& p : kPrinted) {
    Table1Row row;
    row.geometry = p.id;
    row.split = p.split;
    row.manifold = p.manifold;
    row.printed_type = p.type;
    row.printed_metrics = p.metrics;
    row.printed_potential = p.potential;
    row.expected = p.expected;
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.geometry == p.id; });
    row.computed = summarize(*it);
    if (row.computed != row.expected) row.diffs.push_back("expected '" + row.expected + "', computed '" + row.computed + "'");
    for (const auto& f : it->families)
      for (const auto& w : f.witnesses)
        if (!w.agrees) row.diffs.push_back("family witness disagrees: " + f.label);
    for (const auto& w : it->off_family)
      if (!w.agrees) row.diffs.push_back("off-family metric is a soliton");
    if (it->scan.performed && !it->scan.ok)
      row.diffs.push_back("root scan: " + std::to_string(it->scan.unmatched) + " unmatched root(s)");
    for (const auto& c : it->identities)
      if (!c.holds) row.diffs.push_back("identity fails: " + c.name);
    if (!it->ok && row.diffs.empty()) row.diffs.push_back("classification check failed");
    row.ok = row.diffs.empty();
    report.ok = report.ok && row.ok;
    report.rows.push_back(std::move(row));
  }
  report.constant_entries.push_back({"N^4", "Stationary", "Bach flat", "f(x,y,z,w) = k"});
  return report;
}

std::string render_table(const Table1Report& report) {
  std::ostringstream os;
  os << pad("geometry", 10) << " | " << pad("manifold", 14) << " | " << pad("printed type", 18) << " | "
     << pad("printed metrics", 44) << " | " << pad("computed", 46) << " | status\n";
  os << std::string(10, '-') << "-+-" << std::string(14, '-') << "-+-" << std::string(18, '-') << "-+-"
     << std::string(44, '-') << "-+-" << std::string(46, '-') << "-+-------\n";
  for (const auto& r : report.rows) {
    os << pad(std::string(name(r.geometry)), 10) << " | " << pad(r.manifold, 14) << " | " << pad(r.printed_type, 18)
       << " | " << pad(r.printed_metrics, 44) << " | " << pad(r.computed, 46) << " | " << (r.ok ? "OK" : "MISMATCH")
       << "\n";
  }
  os << "\npotentials:\n";
  for (const auto& r : report.rows) os << "  " << pad(std::string(name(r.geometry)), 10) << " " << r.printed_potential << "\n";
  os << "\nconstant entries:\n";
  for (const auto& c : report.constant_entries)
    os << "  " << c.split << " | " << c.printed_type << " | " << c.printed_metrics << " | " << c.printed_potential
       << "\n";
  bool any_diff = false;
  for (const auto& r : report.rows)
    for (const auto& d : r.diffs) {
      if (!any_diff) os << "\ndiffs:\n";
      any_diff = true;
      os << "  " << name(r.geometry) << ": " << d << "\n";
    }
  os << "\n" << report.rows.size() << " rows, " << (report.ok ? "all OK" : "MISMATCH") << "\n";
  return os.str();
}

Json to_json(const Table1Report& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"geometry", std::string(name(r.geometry))},
                        {"split", r.split},
                        {"manifold", r.manifold},
                        {"printed_type", r.printed_type},
                        {"printed_metrics", r.printed_metrics},
                        {"printed_potential", r.printed_potential},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"diffs", r.diffs},
                        {"ok", r.ok}});
  Json constants = Json::array();
  for (const auto& c : report.constant_entries)
    constants.push_back(Json{{"split", c.split},
                             {"printed_type", c.printed_type},
                             {"printed_metrics", c.printed_metrics},
                             {"printed_potential", c.printed_potential}});
  return Json{{"rows", rows}, {"constant_entries", constants}, {"ok", report.ok}};
}

}  // namespace bachflow
