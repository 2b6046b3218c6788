#include "bachflow/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "bachflow/json_io.hpp"
#include "bachflow/report.hpp"

namespace bachflow {

namespace {

Json construction_json(GeometryId id) {
  const Construction c = bracket_table(id);
  if (const auto* sc = std::get_if<StructureConstants>(&c)) {
    Json brackets = Json::array();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const Rational& v = (*sc)(k, i, j);
          if (v != 0) brackets.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", to_string(v)}});
        }
    Json out{{"kind", "lie_group"}, {"brackets", brackets}, {"unimodular", sc->unimodular()}};
    if (const auto lambda = milnor_lambda(id))
      out["milnor_lambda"] = Json::array({to_string((*lambda)[0]), to_string((*lambda)[1]), to_string((*lambda)[2])});
    return out;
  }
  if (const auto* sp = std::get_if<SurfaceProduct>(&c))
    return Json{{"kind", "surface_product"}, {"scalar_curvature_N", to_string(sp->scalar_curvature_N)}};
  return Json{{"kind", "flat"}};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string classify_table(const std::vector<ClassificationEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += std::string(name(e.geometry)) + "  " + summarize(e) + "  [" + (e.ok ? "OK" : "FAIL") + "]\n";
    for (const auto& f : e.families) out += "    " + f.label + ": " + f.constant + ", " + f.potential + "\n";
    if (e.scan.performed) {
      out += "    root scan (" + e.scan.variables + ", [1/8, 8]): " + std::to_string(e.scan.roots.size()) +
             " root(s), " + std::to_string(e.scan.unmatched) + " unmatched\n";
    }
    for (const auto& c : e.identities) out += "    identity " + c.name + ": " + (c.holds ? "holds" : "FAILS") + "\n";
    if (!e.note.empty()) out += "    note: " + e.note + "\n";
  }
  return out;
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::catalog: {
      for (auto id : kAllGeometries) {
        Json line{{"name", std::string(name(id))},
                  {"manifold", std::string(display_name(id))},
                  {"euclidean_dim", euclidean_dim(id)},
                  {"construction", construction_json(id)}};
        out << line.dump() << "\n";
      }
      return 0;
    }
    case Command::bach: {
      const auto id = cfg.geometries.front();
      if (cfg.exact) {
        const auto& g = *cfg.exact_metric;
        out << bach_to_json(id, g, bach_from_curvature(id, g)).dump(2) << "\n";
      } else {
        const auto& g = *cfg.metric;
        out << bach_to_json(id, g, bach_from_curvature(id, g)).dump(2) << "\n";
      }
      return 0;
    }
    case Command::verify: {
      const auto id = cfg.geometries.front();
      Json j;
      bool ok = true;
      auto finish = [&](const auto& cert) {
        j = to_json(cert);
        if (cert.verdict != SolitonType::none) {
          const auto r = ricci_gradient_check(cert);
          j["ricci_gradient"] = scalar_to_json(r);
          ok = r == 0 || (!is_exact_v<std::decay_t<decltype(r)>> && abs_value(r) <= 1e-12);
        }
      };
      if (cfg.exact)
        finish(verify_soliton(id, *cfg.exact_metric));
      else
        finish(verify_soliton(id, *cfg.metric));
      out << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }
    case Command::classify: {
      std::vector<ClassificationEntry> entries;
      if (cfg.all_geometries)
        entries = classify_all();
      else
        entries.push_back(classify(cfg.geometries.front()));
      bool ok = true;
      for (const auto& e : entries) ok = ok && e.ok;
      if (cfg.format == OutputFormat::json) {
        Json a = Json::array();
        for (const auto& e : entries) a.push_back(to_json(e));
        out << a.dump(2) << "\n";
      } else {
        out << classify_table(entries);
      }
      return ok ? 0 : 1;
    }
    case Command::flow: {
      const auto id = cfg.geometries.front();
      const auto traj = run_flow(id, *cfg.metric, cfg.t_max, cfg.flow);
      if (cfg.format == OutputFormat::json) {
        out << to_json(traj).dump(2) << "\n";
      } else {
        out << "t,g00,g11,g22,g33,trace_residual\n";
        for (const auto& s : traj.samples)
          out << fmt(s.t) << "," << fmt(s.g[0]) << "," << fmt(s.g[1]) << "," << fmt(s.g[2]) << "," << fmt(s.g[3]) << ","
              << fmt(s.trace_residual) << "\n";
      }
      if (traj.singularity) {
        err << "singularity (" << traj.singularity->reason << ") at t = " << fmt(traj.singularity->time)
            << ", estimated collapse time " << fmt(traj.singularity->estimated_time) << "\n";
      }
      return 0;
    }
    case Command::table1: {
      const auto report = run_table1_report();
      if (cfg.format == OutputFormat::json)
        out << to_json(report).dump(2) << "\n";
      else
        out << render_table(report);
      if (!report.ok) {
        for (const auto& r : report.rows)
          for (const auto& d : r.diffs) err << name(r.geometry) << ": " << d << "\n";
      }
      return report.ok ? 0 : 1;
    }
  }
  return 1;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_config(argc, argv);
    if (!cfg.help_text.empty()) {
      out << cfg.help_text;
      return 0;
    }
    if (cfg.output_path.empty()) return run_command(cfg, out, err);
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "error: cannot write '" << cfg.output_path << "'\n";
      return 2;
    }
    return run_command(cfg, file, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bachflow
