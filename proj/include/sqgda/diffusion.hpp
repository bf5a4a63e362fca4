#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sqgda/exec.hpp"

namespace sqgda {

/// Coefficients of the forward/reverse SDE pair at pseudo-time t for the
/// alpha(t) = 1 - t, beta^2(t) = t schedule:
///   b(t)      = d log alpha / dt = -1 / (1 - t)
///   sigma2(t) = d beta^2 / dt - 2 b(t) beta^2(t) = (1 + t) / (1 - t)
struct DiffusionCoeffs {
  double alpha;
  double beta2;
  double b;
  double sigma2;
};

/// Uniform pseudo-time grid 0 = t_0 < ... < t_N = T - eps. The clamp eps
/// keeps b and sigma2 finite; the initial marginal stays within O(eps) of a
/// standard Gaussian.
struct DiffusionSchedule {
  double T = 1.0;
  double eps = 1e-3;
  std::vector<double> grid;

  int steps() const { return static_cast<int>(grid.size()) - 1; }
  double t_end() const { return T - eps; }
  DiffusionCoeffs coefficients(double t) const;
};

/// Throws std::domain_error outside [0, T - eps].
DiffusionCoeffs schedule_coefficients(double t, double eps = 1e-3);

/// h(t) = T - t; weights the likelihood score in the posterior score.
double damping(double t, double T = 1.0);

/// Throws std::invalid_argument for n_steps < 1 or eps outside (0, 1).
DiffusionSchedule make_pseudo_time_grid(int n_steps, double eps = 1e-3);

/// One backward Euler-Maruyama update, in place:
///   z <- z - [b(t_next) z - sigma2(t_next) score] dt - sigma(t_next) noise
/// `noise` must already carry the sqrt(dt) Brownian-increment scaling.
void reverse_euler_step(std::span<double> z, double t_next, double dt,
                        std::span<const double> score_value,
                        std::span<const double> noise, double eps = 1e-3);

/// Score of all M trajectories at one pseudo-time, evaluated jointly:
/// z_batch and score_out are row-major M x dim.
using BatchScoreFn = std::function<void(std::span<const double> z_batch, int n_samples,
                                        int dim, double t, std::span<double> score_out)>;

/// Point evaluation s(z, t); adapted to BatchScoreFn by wrap_pointwise_score.
using ScoreFn =
    std::function<void(std::span<const double> z, double t, std::span<double> score_out)>;

BatchScoreFn wrap_pointwise_score(ScoreFn fn);

/// Draws M iid standard-Gaussian samples at t_N and integrates the
/// reverse-time SDE down to t_0. Returns row-major M x dim. Trajectory m owns
/// the random substream (seed, "reverse_sde", m), so results are
/// bit-identical across ExecPolicy and thread count.
std::vector<double> sample_reverse_sde(const DiffusionSchedule& schedule,
                                       const BatchScoreFn& score_fn, int n_samples, int dim,
                                       std::uint64_t seed,
                                       ExecPolicy exec = ExecPolicy::OpenMP);

}  // namespace sqgda
