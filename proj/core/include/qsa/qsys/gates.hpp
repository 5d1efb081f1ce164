#pragma once

#include <Eigen/Dense>

#include "qsa/qsys/density_matrix.hpp"
#include "qsa/qsys/hamiltonian.hpp"

namespace qsa::qsys {

// Rotation by `angle` about the axis (cos(axis_phase), sin(axis_phase), 0)
// acting on the two-level subspace {i, j}; identity elsewhere.
Eigen::MatrixXcd two_level_rotation(int dim, int i, int j, double angle,
                                    double axis_phase);

// Frequency-selective rotation on one addressed transition. Imperfect
// efficiency e < 1 acts as the convex mixture e * (rotated) + (1-e) * rho.
DensityMatrix selective_rotation(const DensityMatrix& rho,
                                 const TransitionTable::Line& line,
                                 double angle, double axis_phase,
                                 double efficiency = 1.0);

// Relative phase e^{i phi} between the |0_e> and |1_e> electron manifolds;
// populations untouched.
DensityMatrix phase_gate(const DensityMatrix& rho, double phi);

// Broadband electron pulse: the same rotation applied in every nuclear
// branch (sensing pulses are fast compared to the hyperfine splitting).
// Acts on the {0_e, 1_e} manifolds only.
DensityMatrix electron_pulse(const DensityMatrix& rho, double angle,
                             double axis_phase);

// Electron re-initialization into |0_e> with the given fidelity; the
// nuclear factor is untouched (illumination effects are applied separately).
DensityMatrix laser_reinit(const DensityMatrix& rho, double fidelity = 1.0);

}  // namespace qsa::qsys
