#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qsa/rng.hpp"

namespace qsa::qsys {

// Piecewise-constant electron label history over [0, duration].
// segments[k] occupies [boundaries[k], boundaries[k+1]) with
// boundaries[0] = 0 and boundaries.back() = duration.
struct LabelTrajectory {
  std::vector<double> boundaries;
  std::vector<int> states;

  int state_at(double t) const;
  int final_state() const { return states.empty() ? 0 : states.back(); }
};

// Stochastic T1 jumps: resampling events arrive as a Poisson process with
// the given rate; at each event the label is redrawn uniformly from
// n_states. With rate = 1/T1 the ensemble polarization decays as
// exp(-t/T1), matching the free_evolution population channel exactly
// (a resample is statistically a symmetric flip at half the rate).
LabelTrajectory sample_flip_trajectory(double duration, double rate,
                                       int initial_state, int n_states,
                                       Rng& rng);

// exp(-i h dt) for a 2x2 Hermitian h (rad/s), closed form.
Eigen::Matrix2cd expm_2x2(const Eigen::Matrix2cd& h, double dt);

// Time-ordered propagator for a two-level system driven by the trajectory:
// each segment evolves under hams[label]. hams must have one entry per
// label value.
Eigen::Matrix2cd conditional_propagator(const LabelTrajectory& traj,
                                        const std::vector<Eigen::Matrix2cd>& hams);

}  // namespace qsa::qsys
