#pragma once

#include <vector>

#include "qsa/signal/phase_accumulation.hpp"

namespace qsa::sig {

// Gauss-Legendre nodes/weights on [0, 2*pi), cached per order.
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;  // normalized: sum = 1
};
const Quadrature& phase_quadrature(int order = 256);

// Weak-signal closed form for the unsynchronized correlation protocol:
//   p(t) = 1/2 (1 - sum_k p0_k cos(2 pi f_k t)),
//   p0_k = 2 gamma_e^2 V0_k^2 t_meas^2 / pi^2.
double analytic_p_weak(const AcSignal& signal, const SensingWindow& window,
                       double t, double gamma_e);

// Weak-signal oscillation amplitude p0 of one tone.
double weak_signal_amplitude(double v0_tesla, double t_meas, double gamma_e);

// Exact phase-averaged correlation p(t) = 1/2 (1 - <sin Phi1 sin Phi2>),
// the second window starting at t_start + t_meas + t. Tones with a fixed
// phase are held fixed; free phases are averaged by deterministic
// Gauss-Legendre quadrature (order nodes per free tone).
double general_correlation(const AcSignal& signal, const SensingWindow& window,
                           double t, double gamma_e,
                           PhaseMode mode = PhaseMode::exact,
                           int quadrature_order = 256);

// <sin Phi1 sin Phi2> for fully specified phases (no averaging).
double correlation_integrand(const AcSignal& signal, const SensingWindow& window,
                             double t, double gamma_e, PhaseMode mode,
                             std::span<const double> phases);

}  // namespace qsa::sig
