#include "qsa/protocol/xy8.hpp"

#include <cmath>
#include <stdexcept>

#include "qsa/constants.hpp"

namespace qsa::proto {

void Xy8Params::validate() const {
  if (n_pulses < 8 || n_pulses % 8 != 0)
    throw std::invalid_argument("Xy8Params: pulse count must be a positive multiple of 8");
  if (!(tau_s > 0.0)) throw std::invalid_argument("Xy8Params: tau must be > 0");
  if (f_target_hz > 0.0) {
    const double rel = std::abs(tau_s * 2.0 * f_target_hz - 1.0);
    if (rel > 1e-9)
      throw std::invalid_argument("Xy8Params: tau inconsistent with 1/(2 f_target)");
  }
}

Xy8Params Xy8Params::from_frequency(int n_pulses, double f_target_hz) {
  if (!(f_target_hz > 0.0))
    throw std::invalid_argument("Xy8Params: target frequency must be > 0");
  Xy8Params p{n_pulses, 1.0 / (2.0 * f_target_hz), f_target_hz};
  p.validate();
  return p;
}

Xy8Params Xy8Params::from_tau(int n_pulses, double tau_s) {
  Xy8Params p{n_pulses, tau_s, 0.0};
  p.validate();
  return p;
}

PulseSequence build_xy8(const Xy8Params& params, double t_start,
                        const Xy8BuildOptions& opts) {
  params.validate();
  if (opts.mw_pulse_s >= 0.5 * params.tau_s)
    throw std::invalid_argument("build_xy8: pulse dead time exceeds tau/2");

  // X Y X Y Y X Y X
  static constexpr double pattern[8] = {0.0, 0.5, 0.0, 0.5, 0.5, 0.0, 0.5, 0.0};

  PulseSequence seq;
  seq.name = "xy8";
  auto pulse = [&](double t, double angle, double phase) {
    PulseEvent e;
    e.channel = Channel::microwave;
    e.start_s = t;
    e.duration_s = opts.mw_pulse_s;
    e.carrier_hz = opts.carrier_hz;
    e.phase_rad = phase;
    e.angle_rad = angle;
    seq.append(e);
  };
  pulse(t_start, 0.5 * pi, opts.opening_phase_rad);
  for (int k = 0; k < params.n_pulses; ++k)
    pulse(t_start + (k + 0.5) * params.tau_s, pi, pattern[k % 8] * pi);
  pulse(t_start + params.t_meas(), 0.5 * pi, opts.closing_phase_rad);
  seq.total_duration_s = t_start + params.t_meas() + opts.mw_pulse_s;
  return seq;
}

}  // namespace qsa::proto
