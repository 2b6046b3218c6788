#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bachflow/catalog.hpp"
#include "bachflow/errors.hpp"
#include "bachflow/metric.hpp"
#include "bachflow/soliton.hpp"

namespace bachflow {

// Homogeneous Bach flow d/dt g_ii = B_ii(g), integrated in u_i = ln g_ii so
// that u_i' = b_i(g) and coefficients stay positive.

enum class Integrator { rk4, rk45 };

std::string_view to_string(Integrator m);
Integrator parse_integrator(std::string_view text);

struct FlowOptions {
  Integrator method = Integrator::rk45;
  /// Fixed step for rk4; ignored by rk45.
  double dt = 1e-2;
  double rtol = 1e-10;
  double atol = 1e-13;
  /// Largest rk45 step; 0 means t_max / 64.
  double max_step = 0.0;
  /// Collapse when some g_ii < collapse_ratio * g_ii(0).
  double collapse_ratio = 1e-8;
  /// Step underflow threshold relative to max(1, |t|).
  double min_step = 1e-12;
  std::size_t max_steps = 10'000'000;
};

struct FlowSample {
  double t = 0.0;
  DiagonalMetric<double> g;
  /// |sum_i g^ii B_ii|
  double trace_residual = 0.0;
  /// Step that produced this sample (0 for the initial state).
  double step = 0.0;
  friend bool operator==(const FlowSample&, const FlowSample&) = default;
};

struct Singularity {
  std::string reason;  // "collapse" or "step underflow"
  /// Time of the last valid state.
  double time = 0.0;
  /// t - 1 / (2 b_i) for the fastest-shrinking slot, exact when the
  /// collapsing factor evolves self-similarly.
  double estimated_time = 0.0;
  std::size_t slot = 0;
  friend bool operator==(const Singularity&, const Singularity&) = default;
};

struct FlowTrajectory {
  GeometryId geometry = GeometryId::r_x_r3;
  Integrator method = Integrator::rk45;
  std::vector<FlowSample> samples;
  std::optional<Singularity> singularity;
  friend bool operator==(const FlowTrajectory&, const FlowTrajectory&) = default;
};

class SingularityError : public DomainError {
 public:
  SingularityError(const std::string& what, Singularity info, DiagonalMetric<double> last_state)
      : DomainError(what), info_(std::move(info)), last_state_(last_state) {}
  const Singularity& info() const { return info_; }
  const DiagonalMetric<double>& last_state() const { return last_state_; }

 private:
  Singularity info_;
  DiagonalMetric<double> last_state_;
};

/// b_i(g) for the flow right-hand side (float mode).
BachRatios<double> flow_rates(GeometryId id, const DiagonalMetric<double>& g);

/// Collapse-time estimate from the current state.
Singularity estimate_collapse(GeometryId id, const DiagonalMetric<double>& g, double t, std::string reason);

/// One step of size dt (rk45 takes the fifth-order Dormand-Prince solution
/// without error control). Throws SingularityError if the state degenerates.
DiagonalMetric<double> step_flow(GeometryId id, const DiagonalMetric<double>& g, double dt, Integrator method);

/// Integrates to t_max or until a singularity, which is reported in the
/// trajectory rather than thrown.
FlowTrajectory run_flow(GeometryId id, const DiagonalMetric<double>& g0, double t_max, const FlowOptions& opts = {});

/// Homothety factor of a self-similar solution for a flow of conformal
/// weight w: (1 - 2c(1 - w/2) t)^(1/(1 - w/2)), and exp(-2ct) for w = 2.
/// Throws DomainError when the base is not positive.
double tau(double w, double c, double t);

/// Max relative deviation of the trajectory from the self-similar solution
/// determined by the certificate: curved slots follow tau(-2, c, t) g(0),
/// flat slots (1 - 4ct)^(-(4-k)/(2k)) g(0).
double self_similarity_check(GeometryId id, const SolitonCertificate<Rational>& cert, const FlowTrajectory& traj);

}  // namespace bachflow
