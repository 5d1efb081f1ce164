#pragma once

#include <span>

#include "qsa/readout/readout.hpp"

namespace qsa::readout {

struct ProbabilityEstimate {
  double p_hat = 0.5;
  double stderr_ = 0.0;
  double log_likelihood = 0.0;
};

// Maximum-likelihood estimate of the pre-readout state-0 probability from a
// set of shot records. Each record is scored against the two initial-state
// hypotheses with a two-state hidden-Markov forward pass (Poisson emission,
// repolarization transitions); the mixture likelihood is then maximized
// over p. The standard error comes from the observed Fisher information.
// Throws if photons_bright == photons_dark (states indistinguishable).
ProbabilityEstimate estimate_probability(std::span<const ShotRecord> records,
                                         const ReadoutParams& params);

// log P(counts | initial state) under the readout model; exposed for the
// Fisher-information tests.
double record_log_likelihood(const ShotRecord& record, int initial_state,
                             const ReadoutParams& params);

}  // namespace qsa::readout
