#include "qsa/readout/estimator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qsa::readout {

namespace {

double log_poisson(int k, double mean) {
  if (mean <= 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return k * std::log(mean) - mean - std::lgamma(k + 1.0);
}

}  // namespace

double record_log_likelihood(const ShotRecord& record, int initial_state,
                             const ReadoutParams& params) {
  // Forward pass over the two nuclear states with per-step rescaling.
  const double survive = params.survival_per_repeat();
  const double p0_pump = params.pumped_p0;
  // transition[a][b] = P(next = b | current = a)
  const double t00 = survive + (1.0 - survive) * p0_pump;
  const double t01 = (1.0 - survive) * (1.0 - p0_pump);
  const double t10 = (1.0 - survive) * p0_pump;
  const double t11 = survive + (1.0 - survive) * (1.0 - p0_pump);

  double a0 = initial_state == 0 ? 1.0 : 0.0;
  double a1 = 1.0 - a0;
  double log_like = 0.0;
  for (std::size_t r = 0; r < record.counts.size(); ++r) {
    const double e0 = std::exp(log_poisson(record.counts[r], params.photons_bright));
    const double e1 = std::exp(log_poisson(record.counts[r], params.photons_dark));
    a0 *= e0;
    a1 *= e1;
    const double norm = a0 + a1;
    if (norm <= 0.0) return -std::numeric_limits<double>::infinity();
    log_like += std::log(norm);
    a0 /= norm;
    a1 /= norm;
    const double b0 = a0 * t00 + a1 * t10;
    const double b1 = a0 * t01 + a1 * t11;
    a0 = b0;
    a1 = b1;
  }
  return log_like;
}

ProbabilityEstimate estimate_probability(std::span<const ShotRecord> records,
                                         const ReadoutParams& params) {
  params.validate();
  if (std::abs(params.photons_bright - params.photons_dark) <
      1e-12 * std::max(params.photons_bright, 1.0))
    throw std::invalid_argument(
        "estimate_probability: photons_bright == photons_dark, states indistinguishable");
  if (records.empty())
    throw std::invalid_argument("estimate_probability: no records");

  // Likelihood is sum_r log(p * a_r + (1-p) * b_r); work with the ratio
  // r = a/b for stability.
  std::vector<double> ratio(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double la = record_log_likelihood(records[i], 0, params);
    const double lb = record_log_likelihood(records[i], 1, params);
    ratio[i] = std::exp(la - lb);
  }

  auto dlog = [&](double p) {
    double d = 0.0;
    for (double r : ratio) d += (r - 1.0) / (p * r + (1.0 - p));
    return d;
  };

  // dlog is strictly decreasing in p; bisect.
  double p_hat;
  if (dlog(0.0) <= 0.0) {
    p_hat = 0.0;
  } else if (dlog(1.0) >= 0.0) {
    p_hat = 1.0;
  } else {
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (dlog(mid) > 0.0) lo = mid;
      else hi = mid;
      if (hi - lo < 1e-12) break;
    }
    p_hat = 0.5 * (lo + hi);
  }

  double fisher = 0.0;
  double log_like = 0.0;
  for (double r : ratio) {
    const double mix = p_hat * r + (1.0 - p_hat);
    fisher += (r - 1.0) * (r - 1.0) / (mix * mix);
    log_like += std::log(mix);
  }
  ProbabilityEstimate est;
  est.p_hat = p_hat;
  est.stderr_ = fisher > 0.0 ? 1.0 / std::sqrt(fisher) : std::numeric_limits<double>::infinity();
  est.log_likelihood = log_like;
  return est;
}

}  // namespace qsa::readout
