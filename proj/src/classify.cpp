#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <utility>

#include "bachflow/parallel.hpp"
#include "bachflow/soliton.hpp"

namespace bachflow {

namespace {

using RMetric = DiagonalMetric<Rational>;

RMetric m(Rational a, Rational b, Rational c, Rational d) { return {{a, b, c, d}}; }

// --- exact family predicates -------------------------------------------------

std::optional<SolitonType> family_of(GeometryId id, const RMetric& g) {
  const Rational& x = g[1];
  const Rational& y = g[2];
  const Rational& z = g[3];
  switch (id) {
    case GeometryId::r4:
      return SolitonType::gaussian;
    case GeometryId::r3_x_n1:
    case GeometryId::r2_x_r2:
    case GeometryId::r_x_r3:
    case GeometryId::r_x_h3:
      return SolitonType::steady;
    case GeometryId::r2_x_s2:
    case GeometryId::r2_x_h2:
      return SolitonType::shrinking;
    case GeometryId::r_x_e2:
      if (x == y) return SolitonType::steady;
      return std::nullopt;
    case GeometryId::r_x_su2:
      if (x == y && y == z) return SolitonType::steady;
      if ((x == y && x == 4 * z) || (x == z && x == 4 * y) || (y == z && y == 4 * x)) return SolitonType::expanding;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// --- witnesses ---------------------------------------------------------------

struct FamilySpec {
  std::string label;
  SolitonType type;
  std::string constant;
  std::vector<RMetric> witnesses;
};

std::vector<FamilySpec> family_specs(GeometryId id) {
  const Rational q(1, 4);
  switch (id) {
    case GeometryId::r4:
      return {{"any", SolitonType::gaussian, "c arbitrary", {m(1, 1, 1, 1), m(2, Rational(1, 3), 5, 7)}}};
    case GeometryId::r3_x_n1:
    case GeometryId::r2_x_r2:
    case GeometryId::r_x_r3:
      return {{"any", SolitonType::steady, "c = 0",
               {m(1, 1, 1, 1), m(2, Rational(1, 3), 5, 5), m(Rational(3, 7), 2, Rational(5, 2), Rational(5, 2))}}};
    case GeometryId::r_x_h3:
      return {{"any", SolitonType::steady, "c = 0",
               {m(1, 1, 1, 1), m(2, Rational(1, 3), 5, 7), m(Rational(3, 7), 2, Rational(5, 2), 11)}}};
    case GeometryId::r2_x_s2:
    case GeometryId::r2_x_h2:
      return {{"g22=g33", SolitonType::shrinking, "c = S_N^2/24",
               {m(1, 1, 1, 1), m(2, 3, 5, 5), m(Rational(1, 2), Rational(7, 3), Rational(2, 9), Rational(2, 9))}}};
    case GeometryId::r_x_e2:
      return {{"g11=g22", SolitonType::steady, "c = 0",
               {m(1, 1, 1, 1), m(2, 3, 3, 5), m(Rational(1, 3), Rational(7, 2), Rational(7, 2), Rational(1, 9))}}};
    case GeometryId::r_x_su2:
      return {{"g11=g22=g33", SolitonType::steady, "c = 0",
               {m(1, 1, 1, 1), m(3, 2, 2, 2), m(Rational(1, 2), Rational(5, 3), Rational(5, 3), Rational(5, 3))}},
              {"g11=g22=4g33", SolitonType::expanding, "c < 0",
               {m(1, 4, 4, 1), m(1, 1, 1, q), m(2, 1, q, 1), m(1, q, 1, 1), m(7, 12, 12, 3)}}};
    default:
      return {};
  }
}

std::vector<RMetric> off_family_samples(GeometryId id) {
  switch (id) {
    case GeometryId::r4:
    case GeometryId::r3_x_n1:
    case GeometryId::r2_x_r2:
    case GeometryId::r_x_r3:
    case GeometryId::r_x_h3:
    case GeometryId::r2_x_s2:
    case GeometryId::r2_x_h2:
      return {};
    case GeometryId::r_x_rs2:
    case GeometryId::r_x_rh2:
      return {m(1, 1, 1, 1), m(2, 3, 5, 5), m(Rational(1, 2), Rational(7, 3), Rational(2, 9), Rational(2, 9))};
    case GeometryId::r_x_e2:
      return {m(1, 1, 2, 3), m(2, Rational(5, 3), 1, Rational(7, 2)), m(1, 4, 1, 1), m(1, 2, 3, 3),
              m(3, Rational(1, 5), 9, 9)};
    default:
      return {m(1, 1, 2, 3), m(2, Rational(5, 3), 1, Rational(7, 2)), m(1, 4, 4, 2), m(1, 1, 1, 2),
              m(3, Rational(1, 5), 9, 9)};
  }
}

FamilyWitness witness(GeometryId id, const RMetric& g, SolitonType expected, const std::string& constant) {
  FamilyWitness w;
  w.metric = g;
  if (id == GeometryId::r4) {
    const auto B = bach_from_curvature(id, g);
    w.agrees = B == BachDiagonal<Rational>{};
    return w;
  }
  w.certificate = verify_soliton(id, g);
  const auto& cert = *w.certificate;
  w.agrees = cert.verdict == expected;
  if (expected == SolitonType::steady) w.agrees = w.agrees && cert.bach_flat && cert.c == 0;
  if (expected == SolitonType::expanding) w.agrees = w.agrees && cert.c < 0 && !cert.bach_flat;
  if (constant == "c = S_N^2/24") {
    const auto sp = std::get<SurfaceProduct>(bracket_table(id));
    const Rational s = surface_scalar_curvature(sp, cert.metric);
    w.agrees = w.agrees && cert.c == s * s / 24;
  }
  return w;
}

std::string potential_for(GeometryId id, SolitonType type) {
  if (type == SolitonType::gaussian) return "f(x,y,z,w) = c (x^2 + y^2 + z^2 + w^2) + a x + b y + d z + h w + k";
  Potential<Rational> p;
  const int k = euclidean_dim(id);
  // Representative coefficient: symbolic constants are rendered as text.
  if (type == SolitonType::steady) {
    p.quadratic.assign(static_cast<std::size_t>(k), Rational(0));
    return potential_text(p);
  }
  if (type == SolitonType::shrinking) return "f(x,y) = c (x^2 + y^2) + a x + b y + d";
  return "f(r) = 2c r^2 + a r + b";
}

// --- bounded root scan ---------------------------------------------------------

struct DoublePoly {
  std::vector<std::pair<std::array<int, 3>, double>> terms;
  explicit DoublePoly(const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) terms.emplace_back(e, to_double(c));
  }
  double operator()(const std::array<double, 3>& v) const {
    double s = 0;
    for (const auto& [e, c] : terms) s += c * std::pow(v[0], e[0]) * std::pow(v[1], e[1]) * std::pow(v[2], e[2]);
    return s;
  }
};

constexpr double kLow = 1.0 / 8.0;
constexpr double kHigh = 8.0;
constexpr double kMinWidth = 1e-12;
constexpr std::size_t kMaxSurvivors = 200000;

struct Cell {
  std::array<double, 2> lo{};
  std::array<double, 2> hi{};
};

/// Every difference polynomial attains both signs (or zero) on the cell's
/// corners and center.
bool flagged(const std::vector<DoublePoly>& diffs, const Cell& c, int dim,
             const std::function<std::array<double, 3>(double, double)>& point) {
  std::vector<std::array<double, 2>> samples;
  if (dim == 1) {
    samples = {{c.lo[0], 0}, {c.hi[0], 0}, {0.5 * (c.lo[0] + c.hi[0]), 0}};
  } else {
    samples = {{c.lo[0], c.lo[1]},
               {c.hi[0], c.lo[1]},
               {c.lo[0], c.hi[1]},
               {c.hi[0], c.hi[1]},
               {0.5 * (c.lo[0] + c.hi[0]), 0.5 * (c.lo[1] + c.hi[1])}};
  }
  for (const auto& d : diffs) {
    bool neg = false;
    bool pos = false;
    for (const auto& s : samples) {
      const double v = d(point(std::exp(s[0]), std::exp(s[1])));
      if (v <= 0) neg = true;
      if (v >= 0) pos = true;
    }
    if (!(neg && pos)) return false;
  }
  return true;
}

std::vector<Cell> split(const Cell& c, int dim) {
  const double mu = 0.5 * (c.lo[0] + c.hi[0]);
  if (dim == 1) return {{{c.lo[0], 0}, {mu, 0}}, {{mu, 0}, {c.hi[0], 0}}};
  const double mv = 0.5 * (c.lo[1] + c.hi[1]);
  return {{{c.lo[0], c.lo[1]}, {mu, mv}},
          {{mu, c.lo[1]}, {c.hi[0], mv}},
          {{c.lo[0], mv}, {mu, c.hi[1]}},
          {{mu, mv}, {c.hi[0], c.hi[1]}}};
}

RootScan scan_roots(GeometryId id, const std::vector<std::vector<double>>& predicted) {
  RootScan scan;
  scan.performed = true;
  const auto N = closed_form_numerators(id);
  const std::vector<Polynomial> exact_diffs = {N[1] - N[2], N[1] - N[3]};

  if (id == GeometryId::r_x_nil) {
    scan.dimension = 0;
    scan.variables = "none (ratios depend on g11 only; normalized g11 = 1)";
    const std::array<Rational, 3> one{1, 1, 1};
    bool all_zero = true;
    for (const auto& d : exact_diffs) all_zero = all_zero && d.evaluate(one) == 0;
    if (all_zero) scan.roots.push_back({});
    scan.matched = 0;
    scan.unmatched = scan.roots.size();
    scan.ok = scan.unmatched == 0 && predicted.empty();
    return scan;
  }

  const bool two_param = id == GeometryId::r_x_su2 || id == GeometryId::r_x_sl2r;
  const int dim = two_param ? 2 : 1;
  scan.dimension = dim;
  scan.variables = two_param ? "x = g11/g33, y = g22/g33" : "x = g11/g22";
  const std::function<std::array<double, 3>(double, double)> point =
      two_param ? std::function<std::array<double, 3>(double, double)>([](double a, double b) {
        return std::array<double, 3>{a, b, 1.0};
      })
                : std::function<std::array<double, 3>(double, double)>([](double a, double) {
                    return std::array<double, 3>{a, 1.0, 0.0};
                  });

  std::vector<DoublePoly> diffs;
  for (const auto& d : exact_diffs) diffs.emplace_back(d);

  const int n = dim == 2 ? 96 : 4096;
  const double lo = std::log(kLow);
  const double hi = std::log(kHigh);
  const double h = (hi - lo) / n;
  scan.grid_cells = dim == 2 ? static_cast<std::size_t>(n) * n : static_cast<std::size_t>(n);

  // One task per grid row; each refines its own cells.
  const std::size_t rows = dim == 2 ? static_cast<std::size_t>(n) : 1;
  auto per_row = parallel_map<std::vector<Cell>>(rows, [&](std::size_t row) {
    std::vector<Cell> level;
    if (dim == 2) {
      for (int j = 0; j < n; ++j) {
        Cell c{{lo + h * static_cast<double>(row), lo + h * j}, {lo + h * static_cast<double>(row + 1), lo + h * (j + 1)}};
        if (flagged(diffs, c, dim, point)) level.push_back(c);
      }
    } else {
      for (int i = 0; i < n; ++i) {
        Cell c{{lo + h * i, 0}, {lo + h * (i + 1), 0}};
        if (flagged(diffs, c, dim, point)) level.push_back(c);
      }
    }
    while (!level.empty() && level.front().hi[0] - level.front().lo[0] > kMinWidth) {
      std::vector<Cell> next;
      for (const auto& c : level)
        for (const auto& s : split(c, dim))
          if (flagged(diffs, s, dim, point)) next.push_back(s);
      if (next.size() > kMaxSurvivors) break;
      level = std::move(next);
    }
    return level;
  });

  std::vector<Cell> survivors;
  for (auto& r : per_row) survivors.insert(survivors.end(), r.begin(), r.end());
  scan.surviving_cells = survivors.size();

  // Cluster survivors whose centers lie within 1e-6 in log coordinates.
  std::vector<std::vector<double>> centers;
  for (const auto& c : survivors) {
    std::vector<double> ctr;
    for (int i = 0; i < dim; ++i) ctr.push_back(0.5 * (c.lo[i] + c.hi[i]));
    centers.push_back(ctr);
  }
  std::vector<int> cluster(centers.size(), -1);
  std::vector<std::vector<double>> sums;
  std::vector<int> counts;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (cluster[i] >= 0) continue;
    const int id_c = static_cast<int>(sums.size());
    sums.push_back(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    counts.push_back(0);
    std::vector<std::size_t> stack = {i};
    cluster[i] = id_c;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (int k = 0; k < dim; ++k) sums[id_c][k] += centers[a][k];
      ++counts[id_c];
      for (std::size_t b = 0; b < centers.size(); ++b) {
        if (cluster[b] >= 0) continue;
        double dist = 0;
        for (int k = 0; k < dim; ++k) dist = std::max(dist, std::fabs(centers[a][k] - centers[b][k]));
        if (dist < 1e-6) {
          cluster[b] = id_c;
          stack.push_back(b);
        }
      }
    }
  }
  for (std::size_t c = 0; c < sums.size(); ++c) {
    std::vector<double> root;
    for (int k = 0; k < dim; ++k) root.push_back(std::exp(sums[c][k] / counts[c]));
    scan.roots.push_back(root);
  }
  std::sort(scan.roots.begin(), scan.roots.end());

  std::vector<bool> found(predicted.size(), false);
  for (const auto& r : scan.roots) {
    bool hit = false;
    for (std::size_t p = 0; p < predicted.size(); ++p) {
      double dist = 0;
      for (int k = 0; k < dim; ++k) dist = std::max(dist, std::fabs(std::log(r[k] / predicted[p][k])));
      if (dist < 1e-8) {
        hit = true;
        found[p] = true;
      }
    }
    if (hit)
      ++scan.matched;
    else
      ++scan.unmatched;
  }
  scan.ok = scan.unmatched == 0 && std::all_of(found.begin(), found.end(), [](bool b) { return b; });
  return scan;
}

std::vector<std::vector<double>> predicted_points(GeometryId id) {
  switch (id) {
    case GeometryId::r_x_su2:
      return {{0.25, 1.0}, {1.0, 0.25}, {1.0, 1.0}, {4.0, 4.0}};
    case GeometryId::r_x_e2:
      return {{1.0}};
    default:
      return {};
  }
}

std::string note_for(GeometryId id) {
  switch (id) {
    case GeometryId::r_x_nil:
      return "b1/b2 = -5/3 for every metric";
    case GeometryId::r_x_solv:
      return "b1 = b3 forces x(4x^3 + 3x^2 y + y^3) = 0";
    case GeometryId::r_x_sl2r:
      return "b2 = b3 forces y = z, then b1 = b2 forces 2x^2 (x+y)(4x+y) = 0";
    case GeometryId::r_x_rs2:
    case GeometryId::r_x_rh2:
      return "b1 = S^2/12 and b2 = -S^2/12 can never agree for S != 0";
    case GeometryId::r_x_h3:
      return "Einstein fiber; Bach vanishes identically";
    case GeometryId::r_x_su2:
      return "permutations of g11 = g22 = 4 g33 are reported as one family";
    case GeometryId::r4:
      return "verify is undefined here: c is unconstrained";
    default:
      return "";
  }
}

}  // namespace

std::optional<SolitonType> in_family(GeometryId id, const DiagonalMetric<Rational>& g) {
  require_positive(g);
  return family_of(id, g);
}

ClassificationEntry classify(GeometryId id) {
  ClassificationEntry entry;
  entry.geometry = id;
  entry.note = note_for(id);
  bool ok = true;

  for (const auto& family_def : family_specs(id)) {
    SolitonFamily fam;
    fam.label = family_def.label;
    fam.type = family_def.type;
    fam.constant = family_def.constant;
    fam.potential = potential_for(id, family_def.type);
    for (const auto& g : family_def.witnesses) {
      auto w = witness(id, g, family_def.type, family_def.constant);
      ok = ok && w.agrees && family_of(id, g) == family_def.type;
      fam.witnesses.push_back(std::move(w));
    }
    entry.families.push_back(std::move(fam));
  }

  for (const auto& g : off_family_samples(id)) {
    auto w = witness(id, g, SolitonType::none, "");
    ok = ok && w.agrees && !family_of(id, g).has_value();
    entry.off_family.push_back(std::move(w));
  }

  if (has_closed_form(id)) {
    entry.scan = scan_roots(id, predicted_points(id));
    ok = ok && entry.scan.ok;
  }

  for (const auto& identity : identities_for(id)) {
    auto c = check(identity);
    ok = ok && c.holds;
    entry.identities.push_back(std::move(c));
  }

  entry.ok = ok;
  return entry;
}

std::vector<ClassificationEntry> classify_all() {
  return parallel_map<ClassificationEntry>(kAllGeometries.size(),
                                           [](std::size_t i) { return classify(kAllGeometries[i]); });
}

}  // namespace bachflow
