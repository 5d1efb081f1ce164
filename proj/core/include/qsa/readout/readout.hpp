#pragma once

#include <cstdint>
#include <vector>

#include "qsa/rng.hpp"

namespace qsa::readout {

// Photon statistics of the repetitive optical readout. State 0 of the
// memory reads bright. The default photon numbers are typical single-shot
// values, not measured ones; override per setup.
struct ReadoutParams {
  double photons_bright = 0.03;  // mean photons per readout, memory in 0
  double photons_dark = 0.02;    // mean photons per readout, memory in 1
  int n_repeats = 1;
  double repolarization_constant_s = 1.2e-3;  // nuclear T1 under readout
  double readout_period_s = 12e-6;
  double pumped_p0 = 1.0;  // steady-state P(state 0) under illumination

  void validate() const;

  // Probability that the state survives un-resampled over one period.
  double survival_per_repeat() const;
};

// One experiment repetition: per-repeat photon counts and the underlying
// nuclear state labels.
struct ShotRecord {
  std::vector<int> counts;
  std::vector<std::int8_t> nuclear_states;
};

// Simulates n_repeats readouts of a memory prepared in state 0 with
// probability nuclear_p0. Between repeats the nuclear state relaxes toward
// the pumped steady state with the repolarization constant.
ShotRecord repetitive_readout(double nuclear_p0, const ReadoutParams& params,
                              Rng& rng);

}  // namespace qsa::readout
