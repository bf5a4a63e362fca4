#include "sqgda/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "sqgda/util.hpp"

namespace sqgda {

std::vector<double> ensemble_mean(const Ensemble& ens) {
  std::vector<double> mean(ens.dim, 0.0);
  for (int m = 0; m < ens.members; ++m) {
    auto xm = ens.member(m);
    for (int i = 0; i < ens.dim; ++i) mean[i] += xm[i];
  }
  const double inv = 1.0 / ens.members;
  for (double& v : mean) v *= inv;
  return mean;
}

EnsembleStats decompose(const Ensemble& ens) {
  if (ens.members < 2)
    throw std::invalid_argument("decompose: perturbation statistics need M >= 2");
  EnsembleStats st;
  st.mean = ensemble_mean(ens);
  st.perts = Ensemble(ens.members, ens.dim);
  st.spread.assign(ens.dim, 0.0);
  for (int m = 0; m < ens.members; ++m) {
    auto xm = ens.member(m);
    auto pm = st.perts.member(m);
    for (int i = 0; i < ens.dim; ++i) {
      pm[i] = xm[i] - st.mean[i];
      st.spread[i] += pm[i] * pm[i];
    }
  }
  const double inv = 1.0 / (ens.members - 1);
  for (double& v : st.spread) v = std::sqrt(v * inv);
  return st;
}

void apply_rtps(std::span<const double> prior_spread, Ensemble& analysis, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("apply_rtps: alpha must lie in [0, 1]");
  if (static_cast<int>(prior_spread.size()) != analysis.dim)
    throw std::invalid_argument("apply_rtps: spread dimension mismatch");
  if (alpha == 0.0) return;

  EnsembleStats st = decompose(analysis);
  bool warned = false;
  std::vector<double> factor(analysis.dim, 1.0);
  for (int i = 0; i < analysis.dim; ++i) {
    if (st.spread[i] > 0.0) {
      factor[i] = 1.0 + alpha * (prior_spread[i] - st.spread[i]) / st.spread[i];
    } else if (!warned && prior_spread[i] > 0.0) {
      log_warn("apply_rtps: zero analysis spread encountered, factor held at 1");
      warned = true;
    }
  }
  for (int m = 0; m < analysis.members; ++m) {
    auto xm = analysis.member(m);
    auto pm = st.perts.member(m);
    for (int i = 0; i < analysis.dim; ++i) xm[i] = st.mean[i] + factor[i] * pm[i];
  }
}

}  // namespace sqgda
