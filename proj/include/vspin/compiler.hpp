#pragma once

#include <complex>
#include <optional>

#include "vspin/gates.hpp"
#include "vspin/pulse.hpp"

namespace vspin {

struct CompilationResult {
  PulseSequence sequence;
  std::optional<GateId> target;
  double measured_distance = 0.0;
  // scalar c with target ≈ c · sequence_operator (the prefactor in front of
  // the pulse product)
  cd measured_phase{1.0, 0.0};
  bool success = false;
};

struct UnsupportedGateError : std::domain_error {
  explicit UnsupportedGateError(const std::string& what) : std::domain_error(what) {}
};

struct CompileError : std::runtime_error {
  explicit CompileError(const std::string& what) : std::runtime_error(what) {}
};

// Lowers a catalog gate to its selective-pulse sequence. Event lists are
// chronological; the matching operator product reads right to left.
// Self-verifies against gate(id) to kVerifyTol before returning.
// H1R/H1S alone have no pulse realization and raise UnsupportedGateError
// pointing at H2.
PulseSequence compile(GateId id);

// Which identity to use when lowering a Δm=3 pulse all the way to Δm=1
// chains: X-conjugation wings (negated inner angle) or Y-conjugation wings.
enum class RewriteStrategy { XChain, YChain };

// Replaces every pulse with |m-n| > max_delta_m by an exact bridge identity
// (Δm=2 wings for max=2, Δm=1 five-pulse chains / Y-bridges for max=1).
// The sequence operator is preserved exactly (global phase 1).
PulseSequence rewrite_delta_m(const PulseSequence& seq, int max_delta_m,
                              RewriteStrategy strategy = RewriteStrategy::XChain);

// Evaluates the sequence and measures distance/phase against the target.
// success iff distance <= tol. Gradient events and non-unitary targets are
// rejected.
CompilationResult verify(const PulseSequence& seq, const Matrix4& target,
                         double tol = kVerifyTol,
                         const SystemSpec& sys = SystemSpec::defaults());
CompilationResult verify(const PulseSequence& seq, GateId target,
                         double tol = kVerifyTol,
                         const SystemSpec& sys = SystemSpec::defaults());

// Σ over pulses of |φ|·w(δm) with w = (ω0/ωq)^{2δm-2}, or (ω0/(ωq·η))^{2δm-2}
// when use_eta is set; gradient and delay events are free. δm = n-m under
// the level↔Zeeman index mapping.
double cost(const PulseSequence& seq, const SystemSpec& sys, bool use_eta = false);

double delta_m_weight(int m, int n, const SystemSpec& sys, bool use_eta);

}  // namespace vspin
