#include "bachflow/json_io.hpp"

#include <cmath>

namespace bachflow {

Json scalar_to_json(const Rational& v) { return to_string(v); }

Json scalar_to_json(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed rational: ") + e.what());
  }
  throw UsageError("expected an exact rational \"p/q\"");
}

double double_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
  }
  throw UsageError("expected a number");
}

namespace {

template <Scalar T>
Json certificate_json(const SolitonCertificate<T>& cert) {
  Json ratios = Json::array();
  for (const auto& v : cert.ratios.b) ratios.push_back(scalar_to_json(v));
  Json quad = Json::array();
  for (const auto& v : cert.potential.quadratic) quad.push_back(scalar_to_json(v));
  Json potential = nullptr;
  if (cert.verdict != SolitonType::none) potential = Json{{"quadratic", quad}, {"text", potential_text(cert.potential)}};
  return Json{{"geometry", std::string(name(cert.geometry))},
              {"mode", is_exact_v<T> ? "exact" : "float"},
              {"metric", metric_to_json(cert.metric)},
              {"verdict", std::string(to_string(cert.verdict))},
              {"c", scalar_to_json(cert.c)},
              {"residual", scalar_to_json(cert.residual)},
              {"ratios", ratios},
              {"potential", potential},
              {"bach_flat", cert.bach_flat}};
}

}  // namespace

Json to_json(const SolitonCertificate<Rational>& cert) { return certificate_json(cert); }
Json to_json(const SolitonCertificate<double>& cert) { return certificate_json(cert); }

template <Scalar T>
SolitonCertificate<T> certificate_from_json(const Json& j) {
  try {
    SolitonCertificate<T> cert;
    cert.geometry = parse_geometry(j.at("geometry").get<std::string>());
    cert.metric = metric_from_json<T>(j.at("metric"));
    cert.verdict = parse_soliton_type(j.at("verdict").get<std::string>());
    cert.c = scalar_from_json<T>(j.at("c"));
    cert.residual = scalar_from_json<T>(j.at("residual"));
    const auto& r = j.at("ratios");
    if (!r.is_array() || r.size() != 4) throw UsageError("ratios must have 4 entries");
    for (std::size_t i = 0; i < 4; ++i) cert.ratios[i] = scalar_from_json<T>(r[i]);
    const auto& p = j.at("potential");
    if (!p.is_null())
      for (const auto& v : p.at("quadratic")) cert.potential.quadratic.push_back(scalar_from_json<T>(v));
    cert.bach_flat = j.at("bach_flat").get<bool>();
    return cert;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed certificate: ") + e.what());
  }
}

template SolitonCertificate<Rational> certificate_from_json<Rational>(const Json&);
template SolitonCertificate<double> certificate_from_json<double>(const Json&);

Json to_json(const FlowTrajectory& traj) {
  Json samples = Json::array();
  for (const auto& s : traj.samples)
    samples.push_back(Json{{"t", s.t},
                           {"g", metric_to_json(s.g)},
                           {"trace_residual", scalar_to_json(s.trace_residual)},
                           {"step", s.step}});
  Json sing = nullptr;
  if (traj.singularity) {
    const auto& s = *traj.singularity;
    sing = Json{{"reason", s.reason},
                {"time", s.time},
                {"estimated_time", scalar_to_json(s.estimated_time)},
                {"slot", s.slot}};
  }
  return Json{{"geometry", std::string(name(traj.geometry))},
              {"method", std::string(to_string(traj.method))},
              {"samples", samples},
              {"singularity", sing}};
}

FlowTrajectory trajectory_from_json(const Json& j) {
  try {
    FlowTrajectory traj;
    traj.geometry = parse_geometry(j.at("geometry").get<std::string>());
    traj.method = parse_integrator(j.at("method").get<std::string>());
    for (const auto& s : j.at("samples")) {
      traj.samples.push_back({s.at("t").get<double>(), metric_from_json<double>(s.at("g")),
                              double_from_json(s.at("trace_residual")), s.at("step").get<double>()});
    }
    const auto& sing = j.at("singularity");
    if (!sing.is_null()) {
      traj.singularity = Singularity{sing.at("reason").get<std::string>(), sing.at("time").get<double>(),
                                     double_from_json(sing.at("estimated_time")),
                                     sing.at("slot").get<std::size_t>()};
    }
    return traj;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed trajectory: ") + e.what());
  }
}

template <Scalar T>
Json bach_to_json(GeometryId id, const DiagonalMetric<T>& g, const BachDiagonal<T>& B) {
  const auto b = bach_ratios(B, g);
  Json comps = Json::array();
  Json ratios = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    comps.push_back(scalar_to_json(B[i]));
    ratios.push_back(scalar_to_json(b[i]));
  }
  return Json{{"geometry", std::string(name(id))},
              {"mode", is_exact_v<T> ? "exact" : "float"},
              {"metric", metric_to_json(g)},
              {"B", comps},
              {"b", ratios},
              {"trace", scalar_to_json(bach_trace(B, g))}};
}

template Json bach_to_json<Rational>(GeometryId, const DiagonalMetric<Rational>&, const BachDiagonal<Rational>&);
template Json bach_to_json<double>(GeometryId, const DiagonalMetric<double>&, const BachDiagonal<double>&);

Json to_json(const ClassificationEntry& entry) {
  Json families = Json::array();
  for (const auto& f : entry.families) {
    Json witnesses = Json::array();
    for (const auto& w : f.witnesses) {
      Json wj{{"metric", metric_to_json(w.metric)}, {"agrees", w.agrees}};
      if (w.certificate) wj["c"] = scalar_to_json(w.certificate->c);
      witnesses.push_back(wj);
    }
    families.push_back(Json{{"label", f.label},
                            {"type", std::string(to_string(f.type))},
                            {"constant", f.constant},
                            {"potential", f.potential},
                            {"witnesses", witnesses}});
  }
  Json off = Json::array();
  for (const auto& w : entry.off_family)
    off.push_back(Json{{"metric", metric_to_json(w.metric)},
                       {"verdict", std::string(to_string(w.certificate->verdict))},
                       {"agrees", w.agrees}});
  Json scan = nullptr;
  if (entry.scan.performed) {
    scan = Json{{"dimension", entry.scan.dimension},
                {"variables", entry.scan.variables},
                {"box", "[1/8, 8]"},
                {"grid_cells", entry.scan.grid_cells},
                {"surviving_cells", entry.scan.surviving_cells},
                {"roots", entry.scan.roots},
                {"matched", entry.scan.matched},
                {"unmatched", entry.scan.unmatched},
                {"ok", entry.scan.ok}};
  }
  Json ids = Json::array();
  for (const auto& c : entry.identities) {
    ids.push_back(Json{{"name", c.name},
                       {"holds", c.holds},
                       {"factor", to_string(c.expected_factor)}});
  }
  return Json{{"geometry", std::string(name(entry.geometry))},
              {"manifold", std::string(display_name(entry.geometry))},
              {"families", families},
              {"off_family", off},
              {"root_scan", scan},
              {"identities", ids},
              {"note", entry.note},
              {"ok", entry.ok}};
}

}  // namespace bachflow
