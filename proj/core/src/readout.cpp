#include "qsa/readout/readout.hpp"

#include <cmath>
#include <stdexcept>

namespace qsa::readout {

void ReadoutParams::validate() const {
  if (!(photons_bright > photons_dark) || !(photons_dark >= 0.0))
    throw std::invalid_argument("ReadoutParams: requires photons_bright > photons_dark >= 0");
  if (n_repeats < 1) throw std::invalid_argument("ReadoutParams: n_repeats must be >= 1");
  if (!(repolarization_constant_s > 0.0) || !(readout_period_s > 0.0))
    throw std::invalid_argument("ReadoutParams: time constants must be > 0");
  if (!(pumped_p0 >= 0.0 && pumped_p0 <= 1.0))
    throw std::invalid_argument("ReadoutParams: pumped_p0 outside [0,1]");
}

double ReadoutParams::survival_per_repeat() const {
  return std::exp(-readout_period_s / repolarization_constant_s);
}

ShotRecord repetitive_readout(double nuclear_p0, const ReadoutParams& params,
                              Rng& rng) {
  params.validate();
  if (!(nuclear_p0 >= 0.0 && nuclear_p0 <= 1.0))
    throw std::invalid_argument("repetitive_readout: nuclear_p0 outside [0,1]");

  ShotRecord record;
  record.counts.resize(params.n_repeats);
  record.nuclear_states.resize(params.n_repeats);

  const double survive = params.survival_per_repeat();
  int state = rng.bernoulli(nuclear_p0) ? 0 : 1;
  for (int r = 0; r < params.n_repeats; ++r) {
    record.nuclear_states[r] = static_cast<std::int8_t>(state);
    const double mean = state == 0 ? params.photons_bright : params.photons_dark;
    record.counts[r] = rng.poisson(mean);
    // Exponential relaxation toward the pumped steady state between repeats.
    if (!rng.bernoulli(survive)) state = rng.bernoulli(params.pumped_p0) ? 0 : 1;
  }
  return record;
}

}  // namespace qsa::readout
