#pragma once

#include <array>

#include <Eigen/Dense>

#include "qsa/qsys/params.hpp"
#include "qsa/qsys/spin_basis.hpp"

namespace qsa::qsys {

// Lab-frame secular Hamiltonian over the simulated subspace, rad/s:
//   H = D*Sz^2 + gamma_e*B*Sz - gamma_n*B*Iz + a_par*Sz*Iz + a_perp*Sz*Ix
// Sz carries the m_S values of the basis, so the operator restricts cleanly
// to the {0,-1} subspace. H is block diagonal in the electron index.
Eigen::MatrixXcd build_hamiltonian(const FieldConfig& field,
                                   const HyperfineParams& hf,
                                   const SpinBasis& basis);

// Interaction-picture Hamiltonian used for free evolution: the electron
// carrier terms D*Sz^2 + gamma_e*B*Sz are removed by the frame choice,
// leaving the nuclear Zeeman and hyperfine terms.
Eigen::MatrixXcd rotating_frame_hamiltonian(const FieldConfig& field,
                                            const HyperfineParams& hf,
                                            const SpinBasis& basis);

// Nuclear 2x2 Hamiltonian conditioned on the electron level m_S, rad/s:
//   h(m) = -gamma_n*B*Iz + a_par*m*Iz + a_perp*m*Ix
Eigen::Matrix2cd conditional_nuclear_hamiltonian(const FieldConfig& field,
                                                 const HyperfineParams& hf,
                                                 double m_s);

// Precession frequency (Hz, >= 0) of the nucleus in the m_S manifold.
double conditional_nuclear_frequency_hz(const FieldConfig& field,
                                        const HyperfineParams& hf, double m_s);

enum class Transition { mw1, mw2, rf1, rf2 };

// The four addressable spin-flip transitions of the two-qubit system.
// mw1 is the lower-frequency electron line; rf1 is the nuclear line in the
// m_S = 0 manifold. mw1 and rf1 share one level, which defines the logical
// memory |0_n> state used by the controlled gates.
struct TransitionTable {
  struct Line {
    int lower = 0;   // basis index of the lower-energy level
    int upper = 0;   // basis index of the upper-energy level
    double frequency_hz = 0.0;
  };

  Line mw1, mw2, rf1, rf2;
  bool mw_degenerate = false;  // hyperfine splitting below resolution
  bool rf_degenerate = false;
  int memory_zero_nuclear_index = 0;  // nuclear index addressed by mw1

  const Line& line(Transition t) const {
    switch (t) {
      case Transition::mw1: return mw1;
      case Transition::mw2: return mw2;
      case Transition::rf1: return rf1;
      default: return rf2;
    }
  }
  std::array<double, 4> frequencies_hz() const {
    return {mw1.frequency_hz, mw2.frequency_hz, rf1.frequency_hz, rf2.frequency_hz};
  }
};

// Derives the four transition frequencies from H by exact diagonalization of
// the per-manifold blocks. Requires a 2-level electron basis and an
// electron-block-diagonal H (the secular form above always is). Degenerate
// pairs are flagged, not silently ordered.
TransitionTable transition_frequencies(const Eigen::MatrixXcd& h,
                                       const SpinBasis& basis,
                                       double degeneracy_tol_hz = 1.0);

const char* to_string(Transition t);

}  // namespace qsa::qsys
