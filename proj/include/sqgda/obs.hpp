#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sqgda/rng.hpp"

namespace sqgda {

enum class ObsKind { LinearIdentity, Arctan, SelectedArctan };

/// An observing network plus (once observe() has run) the observed values.
/// `indices` are flattened state indices; the identity permutation for full
/// coverage. `error_var` is per-observation.
struct ObservationBatch {
  ObsKind kind = ObsKind::LinearIdentity;
  std::vector<int> indices;
  std::vector<double> values;
  std::vector<double> error_var;

  int size() const { return static_cast<int>(indices.size()); }
  bool nonlinear() const { return kind != ObsKind::LinearIdentity; }
};

/// State-proportional stochastic model error: each (probability, amplitude)
/// process independently fires once per cycle and, when it does, adds
/// zero-mean Gaussian noise with per-component std amplitude * |truth_i|.
struct ShockProcess {
  std::vector<std::pair<double, double>> pairs;  // (p_fire, amplitude fraction)
};

/// Builds the network skeleton for one cycle: indices + kind + error_var.
/// Partial coverage draws round(coverage * state_dim) indices uniformly
/// without replacement, redrawn each cycle from the (seed, cycle) substream.
ObservationBatch make_network(ObsKind kind, double coverage, int state_dim,
                              std::uint64_t seed, int cycle_index, double error_var);

/// values = h(truth[indices]) + N(0, error_var); h is identity or arctan.
void observe(std::span<const double> truth, ObservationBatch& net, RngEngine& rng);

/// Deterministic h(member[indices]), no noise. Used by both filters.
std::vector<double> predicted_obs(std::span<const double> member,
                                  const ObservationBatch& net);
void predicted_obs(std::span<const double> member, const ObservationBatch& net,
                   std::span<double> out);

/// Applies the shock processes to `truth` in place.
void apply_shocks(std::span<double> truth, const ShockProcess& proc, RngEngine& rng);

}  // namespace sqgda
