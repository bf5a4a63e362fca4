#include "sqgda/obs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sqgda {

ObservationBatch make_network(ObsKind kind, double coverage, int state_dim,
                              std::uint64_t seed, int cycle_index, double error_var) {
  if (!(coverage > 0.0) || coverage > 1.0)
    throw std::invalid_argument("make_network: coverage must lie in (0, 1]");
  if (!(error_var > 0.0))
    throw std::invalid_argument("make_network: error variance must be positive");
  const int n_obs = static_cast<int>(std::lround(coverage * state_dim));
  if (n_obs < 1) throw std::invalid_argument("make_network: coverage * state_dim < 1");

  ObservationBatch net;
  net.kind = kind;
  if (n_obs == state_dim) {
    net.indices.resize(state_dim);
    std::iota(net.indices.begin(), net.indices.end(), 0);
  } else {
    // partial Fisher-Yates: uniform draw without replacement, fresh per cycle
    RngEngine rng = make_rng(seed, "obs.network", static_cast<std::uint64_t>(cycle_index));
    std::vector<int> pool(state_dim);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < n_obs; ++i) {
      std::uniform_int_distribution<int> pick(i, state_dim - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    net.indices.assign(pool.begin(), pool.begin() + n_obs);
    std::sort(net.indices.begin(), net.indices.end());
    if (kind == ObsKind::Arctan) net.kind = ObsKind::SelectedArctan;
  }
  net.error_var.assign(n_obs, error_var);
  return net;
}

namespace {
inline double apply_h(ObsKind kind, double v) {
  return kind == ObsKind::LinearIdentity ? v : std::atan(v);
}
}  // namespace

void observe(std::span<const double> truth, ObservationBatch& net, RngEngine& rng) {
  const int n = net.size();
  net.values.resize(n);
  std::normal_distribution<double> n01;
  for (int i = 0; i < n; ++i) {
    const int g = net.indices[i];
    if (g < 0 || g >= static_cast<int>(truth.size()))
      throw std::invalid_argument("observe: index outside state bounds");
    const double noise = net.error_var[i] > 0.0 ? std::sqrt(net.error_var[i]) * n01(rng) : 0.0;
    net.values[i] = apply_h(net.kind, truth[g]) + noise;
  }
}

void predicted_obs(std::span<const double> member, const ObservationBatch& net,
                   std::span<double> out) {
  const int n = net.size();
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("predicted_obs: output size mismatch");
  for (int i = 0; i < n; ++i) out[i] = apply_h(net.kind, member[net.indices[i]]);
}

std::vector<double> predicted_obs(std::span<const double> member,
                                  const ObservationBatch& net) {
  std::vector<double> out(net.size());
  predicted_obs(member, net, out);
  return out;
}

void apply_shocks(std::span<double> truth, const ShockProcess& proc, RngEngine& rng) {
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> u01;
  for (const auto& [p, amp] : proc.pairs) {
    if (!(p >= 0.0 && p <= 1.0) || !(amp > 0.0))
      throw std::invalid_argument("apply_shocks: need 0 <= p <= 1 and amplitude > 0");
    if (u01(rng) >= p) continue;
    for (double& x : truth) x += amp * std::abs(x) * n01(rng);
  }
}

}  // namespace sqgda
