#pragma once

#include <Eigen/Dense>

#include "qsa/qsys/density_matrix.hpp"
#include "qsa/qsys/params.hpp"

namespace qsa::qsys {

// exp(-i H t) rho exp(+i H t); H in rad/s, Hermitian. Uses a fast path when
// H is diagonal (the secular 15N configuration).
DensityMatrix unitary_evolution(const DensityMatrix& rho, double duration,
                                const Eigen::MatrixXcd& h);

// Relaxation channels for `duration`:
//  - electron populations relax toward the maximally mixed electron state
//    with time constant T1e; electron coherences decay with T2e
//  - nuclear populations relax toward maximally mixed with T1n; nuclear
//    coherences decay with the effective T2n
// Complete positivity requires T2 <= 2*T1, which RelaxationParams enforces.
// `t1_nuclear` selects the dark or illuminated nuclear constant.
DensityMatrix apply_relaxation(const DensityMatrix& rho, double duration,
                               const RelaxationParams& relax,
                               double t1_nuclear);

// Relaxation with only the T1 channels (coherence factors forced to the CP
// minimum exp(-t/(2 T1))); used inside decoupling trains where phenomeno-
// logical dephasing is treated as refocused.
DensityMatrix apply_t1_relaxation(const DensityMatrix& rho, double duration,
                                  const RelaxationParams& relax,
                                  double t1_nuclear);

// Unitary evolution followed by the relaxation channels (dark nuclear T1).
DensityMatrix free_evolution(const DensityMatrix& rho, double duration,
                             const Eigen::MatrixXcd& h,
                             const RelaxationParams& relax);

}  // namespace qsa::qsys
