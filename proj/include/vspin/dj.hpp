#pragma once

#include "vspin/compiler.hpp"
#include "vspin/density.hpp"
#include "vspin/gates.hpp"

namespace vspin {

enum class DjMode { GateCircuit, SingleOperator, CompiledPulses };
enum class StateModel { Pure, PseudoPure };
enum class Classification { Constant, Balanced };

struct ClassificationError : std::runtime_error {
  ClassificationError(const std::string& what, std::array<double, 4> w)
      : std::runtime_error(what), weights(w) {}
  std::array<double, 4> weights;
};

struct DjResult {
  BoolFn2 fn;
  DjMode mode;
  StateModel model;
  Classification classification;
  Ket4 final_ket;           // trajectory of the starting basis state
  DensityMatrix final_rho;  // full final state
  cd output_phase;          // phase of the dominant amplitude
  double fid;               // readout coherence on transition (1,2)
  std::array<double, 4> level_weights;
  int oracle_applications;  // always exactly one per run
  int prepared_level;       // physical level the preparation distinguished
  double alpha;             // deviation scale (1 for the pure model)
};

// The catalog id of the collapsed-circuit operator for f.
GateId b_gate_id(BoolFn2 f);

// State after the two input pseudo-Hadamards and the oracle, before the
// closing Hadamard, starting from |Ψ1⟩ = |0,1⟩.
Ket4 intermediate_state(BoolFn2 f);

// Executes the two-qubit Deutsch-Jozsa algorithm. Classification reads the
// level carrying the final weight: level 1 -> constant, level 3 -> balanced;
// anything below 0.99 concentration raises ClassificationError. Pseudo-pure
// runs prepare the state, relabel the measured distinguished level to
// logical level 1, and track deviation weights (sign-safe in α).
DjResult run_dj(BoolFn2 f, DjMode mode, StateModel model,
                const SystemSpec& sys = SystemSpec::defaults(), double beta = 1e-3);

std::string dj_mode_name(DjMode m);
std::string classification_name(Classification c);

}  // namespace vspin
