#include "bachflow/flow.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace bachflow {

namespace {

using State = std::array<double, 4>;

// The integrated variable is du_i = ln(g_ii / base_ii); zero rates leave the
// base metric bit-for-bit unchanged.
DiagonalMetric<double> from_log(const DiagonalMetric<double>& base, const State& du) {
  return {{base[0] * std::exp(du[0]), base[1] * std::exp(du[1]), base[2] * std::exp(du[2]),
           base[3] * std::exp(du[3])}};
}

bool usable(const DiagonalMetric<double>& g) {
  for (double v : g.g)
    if (!std::isfinite(v) || !(v > 0)) return false;
  return true;
}

/// Returns false when the state leaves the domain of the right-hand side.
bool rhs(GeometryId id, const DiagonalMetric<double>& base, const State& u, State& out) {
  const auto g = from_log(base, u);
  if (!usable(g)) return false;
  const auto b = flow_rates(id, g);
  for (std::size_t i = 0; i < 4; ++i) {
    if (!std::isfinite(b[i])) return false;
    out[i] = b[i];
  }
  return true;
}

State axpy(const State& u, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State r = u;
  for (const auto& [a, k] : terms)
    for (std::size_t i = 0; i < 4; ++i) r[i] += h * a * (*k)[i];
  return r;
}

bool rk4_step(GeometryId id, const DiagonalMetric<double>& base, const State& u, double h, State& out) {
  State k1, k2, k3, k4;
  if (!rhs(id, base, u, k1)) return false;
  if (!rhs(id, base, axpy(u, h, {{0.5, &k1}}), k2)) return false;
  if (!rhs(id, base, axpy(u, h, {{0.5, &k2}}), k3)) return false;
  if (!rhs(id, base, axpy(u, h, {{1.0, &k3}}), k4)) return false;
  out = axpy(u, h, {{1.0 / 6, &k1}, {1.0 / 3, &k2}, {1.0 / 3, &k3}, {1.0 / 6, &k4}});
  return true;
}

// Dormand-Prince 5(4) tableau.
bool dp45_step(GeometryId id, const DiagonalMetric<double>& base, const State& u, double h, State& out5, State& err) {
  State k1, k2, k3, k4, k5, k6, k7;
  if (!rhs(id, base, u, k1)) return false;
  if (!rhs(id, base, axpy(u, h, {{1.0 / 5, &k1}}), k2)) return false;
  if (!rhs(id, base, axpy(u, h, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}), k3)) return false;
  if (!rhs(id, base, axpy(u, h, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}}), k4)) return false;
  if (!rhs(id, base,
           axpy(u, h, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2}, {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}}),
           k5))
    return false;
  if (!rhs(id, base,
           axpy(u, h,
                {{9017.0 / 3168, &k1},
                 {-355.0 / 33, &k2},
                 {46732.0 / 5247, &k3},
                 {49.0 / 176, &k4},
                 {-5103.0 / 18656, &k5}}),
           k6))
    return false;
  out5 = axpy(u, h,
              {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4}, {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
  if (!rhs(id, base, out5, k7)) return false;
  const State out4 = axpy(u, h,
                          {{5179.0 / 57600, &k1},
                           {7571.0 / 16695, &k3},
                           {393.0 / 640, &k4},
                           {-92097.0 / 339200, &k5},
                           {187.0 / 2100, &k6},
                           {1.0 / 40, &k7}});
  for (std::size_t i = 0; i < 4; ++i) err[i] = out5[i] - out4[i];
  return true;
}

double trace_residual(GeometryId id, const DiagonalMetric<double>& g) {
  return std::fabs(bach_trace(bach_from_curvature(id, g), g));
}

bool collapsed(const DiagonalMetric<double>& g, const DiagonalMetric<double>& g0, double ratio) {
  for (std::size_t i = 0; i < 4; ++i)
    if (g[i] < ratio * g0[i]) return true;
  return false;
}

}  // namespace

std::string_view to_string(Integrator m) { return m == Integrator::rk4 ? "rk4" : "rk45"; }

Integrator parse_integrator(std::string_view text) {
  if (text == "rk4") return Integrator::rk4;
  if (text == "rk45") return Integrator::rk45;
  throw UsageError("unknown integrator '" + std::string(text) + "'");
}

BachRatios<double> flow_rates(GeometryId id, const DiagonalMetric<double>& g) {
  return bach_ratios(bach_from_curvature(id, g), g);
}

Singularity estimate_collapse(GeometryId id, const DiagonalMetric<double>& g, double t, std::string reason) {
  Singularity s;
  s.reason = std::move(reason);
  s.time = t;
  s.estimated_time = std::numeric_limits<double>::infinity();
  const auto b = flow_rates(id, g);
  for (std::size_t i = 0; i < 4; ++i) {
    if (b[i] < 0) {
      const double est = t - 1.0 / (2.0 * b[i]);
      if (est < s.estimated_time) {
        s.estimated_time = est;
        s.slot = i;
      }
    }
  }
  if (!std::isfinite(s.estimated_time)) s.estimated_time = t;
  return s;
}

DiagonalMetric<double> step_flow(GeometryId id, const DiagonalMetric<double>& g, double dt, Integrator method) {
  require_positive(g);
  if (!(dt > 0)) throw DomainError("step size must be positive");
  const State u{};
  State next{};
  State err{};
  const bool ok = method == Integrator::rk4 ? rk4_step(id, g, u, dt, next) : dp45_step(id, g, u, dt, next, err);
  const auto out = ok ? from_log(g, next) : DiagonalMetric<double>{};
  if (!ok || !usable(out)) {
    throw SingularityError("metric degenerates within the step", estimate_collapse(id, g, 0.0, "collapse"), g);
  }
  return out;
}

FlowTrajectory run_flow(GeometryId id, const DiagonalMetric<double>& g0, double t_max, const FlowOptions& opts) {
  require_positive(g0);
  if (!(t_max > 0)) throw DomainError("t_max must be positive");
  FlowTrajectory traj;
  traj.geometry = id;
  traj.method = opts.method;
  traj.samples.push_back({0.0, g0, trace_residual(id, g0), 0.0});

  State u{};
  const State log0{std::log(g0[0]), std::log(g0[1]), std::log(g0[2]), std::log(g0[3])};
  double t = 0.0;
  const double max_step = opts.max_step > 0 ? opts.max_step : t_max / 64.0;
  double h = opts.method == Integrator::rk4 ? opts.dt : std::min(max_step, t_max * 1e-3);
  if (!(h > 0)) throw DomainError("step size must be positive");

  auto stop = [&](const char* reason) {
    traj.singularity = estimate_collapse(id, from_log(g0, u), t, reason);
  };

  for (std::size_t steps = 0; t < t_max && steps < opts.max_steps; ++steps) {
    const double remaining = t_max - t;
    double step = std::min(h, remaining);
    if (step < opts.min_step * std::max(1.0, std::fabs(t)) && step < remaining) {
      stop("step underflow");
      break;
    }

    State next{};
    if (opts.method == Integrator::rk4) {
      if (!rk4_step(id, g0, u, step, next)) {
        stop("collapse");
        break;
      }
    } else {
      State err{};
      bool ok = dp45_step(id, g0, u, step, next, err);
      double norm = std::numeric_limits<double>::infinity();
      if (ok) {
        norm = 0;
        for (std::size_t i = 0; i < 4; ++i) {
          const double sc = opts.atol + opts.rtol * std::max(std::fabs(log0[i] + u[i]), std::fabs(log0[i] + next[i]));
          norm = std::max(norm, std::fabs(err[i]) / sc);
        }
      }
      if (!ok || !(norm <= 1.0)) {
        h = ok ? step * std::clamp(0.9 * std::pow(norm, -0.2), 0.1, 0.5) : step * 0.25;
        continue;
      }
      const double grow = norm > 0 ? 0.9 * std::pow(norm, -0.2) : 5.0;
      h = std::min(max_step, step * std::clamp(grow, 0.2, 5.0));
    }

    const auto g = from_log(g0, next);
    if (!usable(g)) {
      stop("collapse");
      break;
    }
    u = next;
    t = step == remaining ? t_max : t + step;
    traj.samples.push_back({t, g, trace_residual(id, g), step});
    if (collapsed(g, g0, opts.collapse_ratio)) {
      stop("collapse");
      break;
    }
  }
  return traj;
}

double tau(double w, double c, double t) {
  if (w == 2.0) return std::exp(-2.0 * c * t);
  const double a = 1.0 - w / 2.0;
  const double base = 1.0 - 2.0 * c * a * t;
  if (!(base > 0)) throw DomainError("tau undefined: 1 - 2c(1 - w/2)t <= 0");
  const double v = std::pow(base, 1.0 / a);
  if (!(v > 0)) throw DomainError("tau must be positive");
  return v;
}

double self_similarity_check(GeometryId id, const SolitonCertificate<Rational>& cert, const FlowTrajectory& traj) {
  if (cert.verdict == SolitonType::none) throw NoPotentialError("certificate is not a soliton");
  if (cert.geometry != id || traj.geometry != id) throw DomainError("certificate and trajectory geometries differ");
  if (traj.samples.empty()) return 0.0;
  const auto& g0 = traj.samples.front().g;
  const auto expected = to_double(cert.metric);
  for (std::size_t i = 1; i < 4; ++i)
    if (std::fabs(g0[i] - expected[i]) > 1e-12 * expected[i])
      throw DomainError("trajectory does not start at the certified fiber metric");

  const int k = euclidean_dim(id);
  const double c = to_double(cert.c);
  const double flat_exponent = -static_cast<double>(4 - k) / (2.0 * k);
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const double base = 1.0 - 4.0 * c * s.t;
    for (std::size_t i = 0; i < 4; ++i) {
      const double predicted = static_cast<int>(i) >= k ? tau(-2.0, c, s.t) * g0[i] : std::pow(base, flat_exponent) * g0[i];
      worst = std::max(worst, std::fabs(s.g[i] - predicted) / predicted);
    }
  }
  return worst;
}

}  // namespace bachflow
