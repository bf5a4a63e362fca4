#pragma once

#include <span>
#include <vector>

namespace sqgda {

/// M state vectors of common dimension, row-major and contiguous.
struct Ensemble {
  int members = 0;
  int dim = 0;
  std::vector<double> data;

  Ensemble() = default;
  Ensemble(int m, int d) : members(m), dim(d), data(std::size_t(m) * d, 0.0) {}

  std::span<double> member(int m) {
    return std::span(data).subspan(std::size_t(m) * dim, dim);
  }
  std::span<const double> member(int m) const {
    return std::span(data).subspan(std::size_t(m) * dim, dim);
  }
};

/// Mean, member perturbations and per-component sample standard deviation
/// (divisor M - 1).
struct EnsembleStats {
  std::vector<double> mean;
  std::vector<double> spread;
  Ensemble perts;
};

/// Throws std::invalid_argument for M < 2.
EnsembleStats decompose(const Ensemble& ens);

std::vector<double> ensemble_mean(const Ensemble& ens);

/// Relaxation-to-prior-spread inflation, in place and component-wise:
/// perturbations are scaled by 1 + alpha (sigma_b - sigma_a) / sigma_a and
/// re-added to the (unchanged) analysis mean. Components with zero analysis
/// spread keep factor 1. Throws std::invalid_argument for alpha outside [0, 1].
void apply_rtps(std::span<const double> prior_spread, Ensemble& analysis, double alpha);

}  // namespace sqgda
