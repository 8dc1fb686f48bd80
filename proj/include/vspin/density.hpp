#pragma once

#include <array>

#include "vspin/pulse.hpp"

namespace vspin {

inline constexpr double kDensityTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

struct StateInvariantError : std::runtime_error {
  explicit StateInvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct PreparationError : std::runtime_error {
  PreparationError(const std::string& what, std::array<double, 4> diag)
      : std::runtime_error(what), diagonal(diag) {}
  std::array<double, 4> diagonal;
};

// Hermitian, unit-trace, positive-semidefinite 4x4 state. Construction
// validates the invariants (Hermiticity/trace to 1e-12, eigenvalue floor
// -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix4& rho);

  static DensityMatrix pure(const Ket4& psi);
  static DensityMatrix maximally_mixed();

  const Matrix4& matrix() const { return rho_; }
  double population(int level) const { return rho_.at(level, level).real(); }
  std::array<double, 4> populations() const;

  // Traceless part ρ - (trρ/4)E.
  Matrix4 deviation() const;

 private:
  Matrix4 rho_;
};

// Eigenvalues of a Hermitian 4x4 matrix, ascending (cyclic Jacobi).
std::array<double, 4> hermitian_eigenvalues(const Matrix4& h);

// Thermodynamic equilibrium state. Exact: diag(e^{-βε_m})/Z. Linearized:
// (E - β·diag(ε - ε̄))/4 with ε̄ centering the trace. The exact form
// rejects overflow-range β with a hint to linearize.
DensityMatrix thermal_state(const SystemSpec& sys, double beta, bool linearize = false);

// Pulsed-gradient crusher: zeroes every off-diagonal element; diagonal and
// trace preserved exactly; idempotent.
DensityMatrix crush(const DensityMatrix& rho);

// Applies events chronologically: pulses and delays as U·ρ·U†, gradients as
// crush.
DensityMatrix evolve(const DensityMatrix& rho, const PulseSequence& seq,
                     const SystemSpec& sys = SystemSpec::defaults());

enum class GradientOrder {
  PulsesFirst,   // X02(π/2), X23(π), then the crusher (the valid ordering)
  GradientFirst  // crusher first; kept for comparison, fails preparation
};

struct PseudoPureState {
  DensityMatrix rho;
  int distinguished_level;  // the one level whose population differs
  double alpha;             // distinguished minus common population
  double common;            // the shared population of the other three
  GradientOrder order;
};

// Runs the preparation sequence on the linearized thermal state and checks
// the 3-equal/1-distinct diagonal (PreparationError otherwise, carrying the
// diagonal).
PseudoPureState prepare_pseudo_pure(const SystemSpec& sys, double beta,
                                    GradientOrder order = GradientOrder::PulsesFirst);

// Readout: applies X_mn(π/2) and returns the modulus of the resulting
// (m,n) coherence; equals |p_m - p_n|/2 for diagonal input.
double fid_amplitude(const DensityMatrix& rho, int m, int n);

}  // namespace vspin
