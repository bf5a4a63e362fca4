#include "sqgda/diffusion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sqgda/rng.hpp"

namespace sqgda {

DiffusionCoeffs schedule_coefficients(double t, double eps) {
  if (!(t >= 0.0) || !(t <= 1.0 - eps))
    throw std::domain_error("schedule_coefficients: t=" + std::to_string(t) +
                            " outside [0, 1 - eps], eps=" + std::to_string(eps));
  const double om = 1.0 - t;
  return DiffusionCoeffs{om, t, -1.0 / om, (1.0 + t) / om};
}

DiffusionCoeffs DiffusionSchedule::coefficients(double t) const {
  return schedule_coefficients(t, eps);
}

double damping(double t, double T) { return T - t; }

DiffusionSchedule make_pseudo_time_grid(int n_steps, double eps) {
  if (n_steps < 1)
    throw std::invalid_argument("make_pseudo_time_grid: need at least one step");
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("make_pseudo_time_grid: eps must lie in (0, 1)");
  DiffusionSchedule s;
  s.eps = eps;
  s.grid.resize(n_steps + 1);
  const double t_end = s.T - eps;
  for (int i = 0; i <= n_steps; ++i) s.grid[i] = t_end * double(i) / double(n_steps);
  s.grid.front() = 0.0;
  s.grid.back() = t_end;
  return s;
}

void reverse_euler_step(std::span<double> z, double t_next, double dt,
                        std::span<const double> score_value, std::span<const double> noise,
                        double eps) {
  if (z.size() != score_value.size() || z.size() != noise.size())
    throw std::invalid_argument("reverse_euler_step: dimension mismatch");
  if (!(dt > 0.0)) throw std::invalid_argument("reverse_euler_step: dt must be positive");
  const DiffusionCoeffs c = schedule_coefficients(t_next, eps);
  const double sigma = std::sqrt(c.sigma2);
  for (std::size_t i = 0; i < z.size(); ++i)
    z[i] -= (c.b * z[i] - c.sigma2 * score_value[i]) * dt + sigma * noise[i];
}

BatchScoreFn wrap_pointwise_score(ScoreFn fn) {
  return [fn = std::move(fn)](std::span<const double> z_batch, int n_samples, int dim,
                              double t, std::span<double> score_out) {
    for (int m = 0; m < n_samples; ++m)
      fn(z_batch.subspan(std::size_t(m) * dim, dim), t,
         score_out.subspan(std::size_t(m) * dim, dim));
  };
}

std::vector<double> sample_reverse_sde(const DiffusionSchedule& schedule,
                                       const BatchScoreFn& score_fn, int n_samples, int dim,
                                       std::uint64_t seed, ExecPolicy exec) {
  if (n_samples < 1) throw std::invalid_argument("sample_reverse_sde: need n_samples >= 1");
  if (dim < 1) throw std::invalid_argument("sample_reverse_sde: need dim >= 1");
  const int n_steps = schedule.steps();
  if (n_steps < 1) throw std::invalid_argument("sample_reverse_sde: empty schedule");

  std::vector<double> z(std::size_t(n_samples) * dim);
  std::vector<double> score(z.size());
  std::vector<RngEngine> streams;
  streams.reserve(n_samples);
  for (int m = 0; m < n_samples; ++m) streams.emplace_back(make_rng(seed, "reverse_sde", m));

  parallel_for(exec, n_samples, [&](std::int64_t m) {
    fill_standard_normal(streams[m], std::span(z).subspan(std::size_t(m) * dim, dim));
  });

  std::vector<double> noise(z.size());
  for (int n = n_steps - 1; n >= 0; --n) {
    const double t_next = schedule.grid[n + 1];
    const double dt = schedule.grid[n + 1] - schedule.grid[n];
    score_fn(z, n_samples, dim, t_next, score);
    parallel_for(exec, n_samples, [&](std::int64_t m) {
      auto zm = std::span(z).subspan(std::size_t(m) * dim, dim);
      auto nm = std::span(noise).subspan(std::size_t(m) * dim, dim);
      fill_standard_normal(streams[m], nm);
      const double sq = std::sqrt(dt);
      for (double& v : nm) v *= sq;
      reverse_euler_step(zm, t_next, dt,
                         std::span<const double>(score).subspan(std::size_t(m) * dim, dim),
                         nm, schedule.eps);
    });
  }
  return z;
}

}  // namespace sqgda
