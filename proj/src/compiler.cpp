#include "vspin/compiler.hpp"

#include <cmath>

namespace vspin {

namespace {

PulseSpec P(Axis a, int m, int n, Angle angle, Angle phase = Angle::zero()) {
  return PulseSpec(a, m, n, angle, phase);
}

void append(PulseSequence& seq, const std::vector<PulseSpec>& pulses) {
  for (const auto& p : pulses) seq << p;
}

// L_(mn,kl)(α,β) as pulses, chronological (closing Y pair fires first).
std::vector<PulseSpec> l_pulses(int m, int n, int k, int l, int alpha, int beta) {
  return {
      P(Axis::Y, m, n, Angle::pi_over(-1, 2)), P(Axis::Y, k, l, Angle::pi_over(-1, 2)),
      P(Axis::X, m, n, Angle::pi_over(alpha, 2)), P(Axis::X, k, l, Angle::pi_over(beta, 2)),
      P(Axis::Y, m, n, Angle::pi_over(1, 2)), P(Axis::Y, k, l, Angle::pi_over(1, 2)),
  };
}

// M_mn(α) = Y_mn(απ)·X_mn(π), chronological.
std::vector<PulseSpec> m_pulses(int m, int n, int alpha) {
  return {P(Axis::X, m, n, Angle::pi()), P(Axis::Y, m, n, Angle::pi(alpha))};
}

std::vector<PulseSpec> h1R_pulses() {
  return {P(Axis::Y, 0, 1, Angle::pi_over(1, 2)), P(Axis::Y, 2, 3, Angle::pi_over(1, 2))};
}

std::vector<PulseSpec> h1S_pulses() {
  return {P(Axis::Y, 0, 2, Angle::pi_over(1, 2)), P(Axis::Y, 1, 3, Angle::pi_over(1, 2))};
}

PulseSequence realization(GateId id) {
  PulseSequence seq;
  switch (id) {
    case GateId::E:
    case GateId::D00:
    case GateId::B00:
      break;  // identity: no pulses
    case GateId::NOT1:
      seq << P(Axis::X, 0, 2, Angle::pi()) << P(Axis::X, 1, 3, Angle::pi());
      break;
    case GateId::NOT2:
    case GateId::D11:
      seq << P(Axis::X, 0, 1, Angle::pi()) << P(Axis::X, 2, 3, Angle::pi());
      break;
    case GateId::NOT:
      seq << P(Axis::X, 0, 3, Angle::pi()) << P(Axis::X, 1, 2, Angle::pi());
      break;
    case GateId::SWAP:
      seq << P(Axis::X, 1, 2, Angle::pi());
      append(seq, l_pulses(0, 1, 2, 3, -1, 1));
      break;
    case GateId::CNOT12:
    case GateId::D01:
      seq << P(Axis::X, 2, 3, Angle::pi());
      append(seq, l_pulses(0, 2, 1, 3, -1, -1));
      break;
    case GateId::CNOT21:
      seq << P(Axis::X, 1, 3, Angle::pi());
      append(seq, l_pulses(0, 1, 2, 3, -1, -1));
      break;
    case GateId::ICNOT12:
    case GateId::D10:
      seq << P(Axis::X, 0, 1, Angle::pi());
      append(seq, l_pulses(0, 2, 1, 3, 1, 1));
      break;
    case GateId::ICNOT21:
      seq << P(Axis::X, 0, 2, Angle::pi());
      append(seq, l_pulses(0, 1, 2, 3, 1, 1));
      break;
    case GateId::h1R:
      append(seq, h1R_pulses());
      break;
    case GateId::h1S:
      append(seq, h1S_pulses());
      break;
    case GateId::h2:
      // the two pair blocks commute; emitted reading-order
      append(seq, h1R_pulses());
      append(seq, h1S_pulses());
      break;
    case GateId::H2:
      seq << P(Axis::Y, 2, 3, Angle::pi(2));
      append(seq, h1S_pulses());
      seq << P(Axis::Y, 1, 3, Angle::pi(2));
      append(seq, h1R_pulses());
      break;
    case GateId::PI0:
      append(seq, m_pulses(0, 1, 1));
      append(seq, l_pulses(0, 2, 1, 3, 1, 1));
      break;
    case GateId::PI1:
      append(seq, m_pulses(0, 1, -1));
      append(seq, l_pulses(0, 2, 1, 3, 1, 1));
      break;
    case GateId::PI2:
      append(seq, m_pulses(2, 3, 1));
      append(seq, l_pulses(0, 2, 1, 3, -1, -1));
      break;
    case GateId::PI3:
      append(seq, m_pulses(2, 3, -1));
      append(seq, l_pulses(0, 2, 1, 3, -1, -1));
      break;
    case GateId::B01:
      seq << P(Axis::X, 1, 3, Angle::pi());
      break;
    case GateId::B10:
      seq << P(Axis::X, 1, 3, Angle::pi(-1));
      break;
    case GateId::B11:
      seq << P(Axis::X, 1, 3, Angle::pi(2));
      break;
    case GateId::STAR_P5:
      seq << P(Axis::X, 1, 2, Angle::pi());
      break;
    case GateId::STAR_P6:
      seq << P(Axis::X, 2, 3, Angle::pi());
      break;
    case GateId::STAR_P7:
      seq << P(Axis::X, 1, 3, Angle::pi());
      break;
    case GateId::STAR_P8:
      seq << P(Axis::X, 0, 1, Angle::pi());
      break;
    case GateId::STAR_P9:
      seq << P(Axis::X, 0, 2, Angle::pi());
      break;
    case GateId::H1R:
    case GateId::H1S:
      throw UnsupportedGateError(gate_name(id) +
                                 " has no standalone pulse realization; the nearest "
                                 "supported composite is H2");
  }
  return seq;
}

}  // namespace

PulseSequence compile(GateId id) {
  PulseSequence seq = realization(id);
  const double d = phase_distance(sequence_operator(seq), gate(id));
  if (d > kVerifyTol)
    throw CompileError("compiled sequence for " + gate_name(id) +
                       " failed self-verification (distance " + std::to_string(d) + ")");
  return seq;
}

namespace {

// Exact lowering identities. All wings use zero RF phase; the inner pulse
// keeps the original angle/phase (negated angle inside X wings).
std::vector<PulseSpec> lower_pulse(const PulseSpec& p, int max_dm,
                                   RewriteStrategy strategy) {
  const int dm = p.n - p.m;
  if (dm <= max_dm) return {p};
  if (dm == 2) {
    // (0,2) -> wings on (0,1), inner (1,2); (1,3) -> wings on (1,2), inner (2,3)
    const int w = p.m;
    return {P(Axis::Y, w, w + 1, Angle::pi()),
            P(p.axis, w + 1, w + 2, p.angle, p.phase),
            P(Axis::Y, w, w + 1, Angle::pi(-1))};
  }
  // dm == 3, transition (0,3)
  if (max_dm == 2)
    return {P(Axis::Y, 0, 2, Angle::pi()),
            P(p.axis, 2, 3, p.angle, p.phase),
            P(Axis::Y, 0, 2, Angle::pi(-1))};
  if (strategy == RewriteStrategy::XChain)
    return {P(Axis::X, 0, 1, Angle::pi()), P(Axis::X, 1, 2, Angle::pi()),
            P(p.axis, 2, 3, -p.angle, p.phase),
            P(Axis::X, 1, 2, Angle::pi(-1)), P(Axis::X, 0, 1, Angle::pi(-1))};
  return {P(Axis::Y, 0, 1, Angle::pi()), P(Axis::Y, 1, 2, Angle::pi()),
          P(p.axis, 2, 3, p.angle, p.phase),
          P(Axis::Y, 1, 2, Angle::pi(-1)), P(Axis::Y, 0, 1, Angle::pi(-1))};
}

}  // namespace

PulseSequence rewrite_delta_m(const PulseSequence& seq, int max_delta_m,
                              RewriteStrategy strategy) {
  if (max_delta_m != 1 && max_delta_m != 2)
    throw std::domain_error("max_delta_m must be 1 or 2");
  PulseSequence out;
  for (const auto& ev : seq.events) {
    if (const auto* p = std::get_if<PulseSpec>(&ev)) {
      for (auto& q : lower_pulse(*p, max_delta_m, strategy)) out << q;
    } else {
      out << ev;
    }
  }
  return out;
}

CompilationResult verify(const PulseSequence& seq, const Matrix4& target, double tol,
                         const SystemSpec& sys) {
  if (seq.has_gradient())
    throw std::invalid_argument(
        "sequence contains a gradient event; verification applies to unitary "
        "sequences only");
  if (!target.is_unitary(kVerifyTol))
    throw std::invalid_argument("verification target must be unitary");
  CompilationResult r;
  r.sequence = seq;
  const Matrix4 u = sequence_operator(seq, sys);
  r.measured_distance = phase_distance(u, target);
  const cd t = (u.adjoint() * target).trace();
  r.measured_phase = std::abs(t) > 1e-9 ? t / std::abs(t) : cd(1.0, 0.0);
  r.success = r.measured_distance <= tol;
  return r;
}

CompilationResult verify(const PulseSequence& seq, GateId target, double tol,
                         const SystemSpec& sys) {
  CompilationResult r = verify(seq, gate(target), tol, sys);
  r.target = target;
  return r;
}

double delta_m_weight(int m, int n, const SystemSpec& sys, bool use_eta) {
  if (!(sys.omega0 > 0) || !(sys.omegaq > 0))
    throw std::domain_error("cost model requires positive omega0 and omegaq");
  if (use_eta && !(sys.eta > 0))
    throw std::domain_error("cost model with eta requires eta > 0");
  const int dm = n - m;
  const double base = use_eta ? sys.omega0 / (sys.omegaq * sys.eta) : sys.omega0 / sys.omegaq;
  return std::pow(base, 2 * dm - 2);
}

double cost(const PulseSequence& seq, const SystemSpec& sys, bool use_eta) {
  double total = 0.0;
  for (const auto& ev : seq.events)
    if (const auto* p = std::get_if<PulseSpec>(&ev))
      total += std::abs(p->angle.value()) * delta_m_weight(p->m, p->n, sys, use_eta);
  return total;
}

}  // namespace vspin
