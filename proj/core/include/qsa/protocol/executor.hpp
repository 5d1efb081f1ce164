#pragma once

#include <cstdint>
#include <vector>

#include "qsa/protocol/correlation_protocol.hpp"
#include "qsa/qsys/density_matrix.hpp"
#include "qsa/qsys/evolution.hpp"
#include "qsa/qsys/gates.hpp"
#include "qsa/readout/readout.hpp"
#include "qsa/signal/correlation.hpp"

namespace qsa::proto {

struct ExecutionResult {
  double p = 1.0;                  // electron |0_e> population before readout
  double nuclear_p0 = 0.0;         // memory logical-0 population at train start
  std::vector<int> photon_counts;  // per repetitive readout
};

struct EngineOptions {
  double laser_init_fidelity = 1.0;
  sig::PhaseMode phase_mode = sig::PhaseMode::exact;
  bool thermal_nucleus = false;  // initial nuclear state: thermal vs polarized
};

// Interpreter over pulse schedules for the electron + memory-nucleus system.
// Conventions:
//  - gates act instantaneously at event start; event durations are schedule
//    bookkeeping and evolve as free precession
//  - unconditional pi/2 pulses open and close sensing windows; the signal
//    phase accumulated over a window (sign toggled at each unconditional pi
//    pulse) is applied as one phase gate at the window close
//  - inside sensing windows only the T1 channels act (phenomenological
//    dephasing is treated as refocused by the train); bare waits and
//    technical gaps see the full relaxation channel
//  - the signal couples only during sensing windows
//  - the repetitive readout train is delegated to the photon-statistics
//    model: state evolution stops at the readout marker
class Engine {
 public:
  Engine(qsys::SpinBasis basis, qsys::FieldConfig field,
         qsys::HyperfineParams hyperfine, qsys::RelaxationParams relax,
         GateEfficiencies efficiencies, EngineOptions options = {});

  const qsys::TransitionTable& table() const { return table_; }
  const Eigen::MatrixXcd& rotating_frame() const { return h_rot_; }
  const qsys::SpinBasis& basis() const { return basis_; }
  const qsys::RelaxationParams& relaxation() const { return relax_; }

  qsys::DensityMatrix initial_state() const;

  ExecutionResult execute(const PulseSequence& seq, const sig::AcSignal& signal,
                          const readout::ReadoutParams* readout_params,
                          std::uint64_t seed) const;

  // Executes with every free tone phase fixed to the given values
  // (deterministic; used for oracle comparisons).
  ExecutionResult execute_with_phases(const PulseSequence& seq,
                                      const sig::AcSignal& signal,
                                      std::span<const double> phases,
                                      const readout::ReadoutParams* readout_params,
                                      std::uint64_t seed) const;

 private:
  qsys::SpinBasis basis_;
  qsys::FieldConfig field_;
  qsys::HyperfineParams hyperfine_;
  qsys::RelaxationParams relax_;
  GateEfficiencies efficiencies_;
  EngineOptions options_;
  Eigen::MatrixXcd h_lab_;
  Eigen::MatrixXcd h_rot_;
  qsys::TransitionTable table_;
};

}  // namespace qsa::proto
