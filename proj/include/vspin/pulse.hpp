#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vspin/matrix4.hpp"
#include "vspin/system.hpp"

namespace vspin {

// Pulse angle: either an exact rational multiple of π (kept symbolic so
// compiled angles round-trip through the text format bit-exactly) or plain
// radians.
class Angle {
 public:
  Angle() : pi_(true), num_(0), den_(1), rad_(0.0) {}

  static Angle pi_over(std::int64_t num, std::int64_t den);
  static Angle pi(std::int64_t mult = 1) { return pi_over(mult, 1); }
  static Angle radians(double r);
  static Angle zero() { return Angle(); }

  bool is_pi_rational() const { return pi_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return rad_; }  // radians

  Angle operator-() const;
  bool operator==(const Angle& o) const = default;

  std::string str() const;  // canonical literal: "pi/2", "-2pi", "0.75", ...

 private:
  bool pi_;
  std::int64_t num_, den_;  // normalized, den_ > 0
  double rad_;
};

enum class Axis : std::uint8_t { X, Y };

// One selective RF pulse: rotation axis, resonant transition (m < n),
// rotation angle and RF phase.
struct PulseSpec {
  Axis axis = Axis::X;
  int m = 0, n = 1;
  Angle angle;
  Angle phase;  // default 0

  PulseSpec() = default;
  PulseSpec(Axis ax, int mm, int nn, Angle a, Angle f = Angle::zero());

  bool operator==(const PulseSpec&) const = default;
};

// Pulsed-field parameters sufficient to derive a rotation angle.
struct PhysicalPulse {
  double gamma;      // rad s^-1 T^-1
  double amplitude;  // T
  double duration;   // s
  double carrier;    // rad/s
  double phase;      // rad
};

struct GradientEvent {
  bool operator==(const GradientEvent&) const = default;
};

struct DelayEvent {
  double seconds = 0.0;
  bool operator==(const DelayEvent&) const = default;
};

using SequenceEvent = std::variant<PulseSpec, GradientEvent, DelayEvent>;

// Time-ordered event list, earliest first. The composite operator is the
// product of event propagators in reverse list order (the last event is the
// leftmost factor).
struct PulseSequence {
  std::vector<SequenceEvent> events;

  PulseSequence() = default;
  PulseSequence(std::initializer_list<SequenceEvent> evs) : events(evs) {}

  std::size_t size() const { return events.size(); }
  bool has_gradient() const;
  std::size_t pulse_count() const;
  PulseSequence& operator<<(SequenceEvent ev) {
    events.push_back(std::move(ev));
    return *this;
  }
  bool operator==(const PulseSequence&) const = default;
};

// Selective-pulse propagator:
//   Y_mn(φ,f) = I_kk + I_ll + cos(φ/2)(I_mm+I_nn)
//               + sin(φ/2)(I_nm e^{if} − I_mn e^{−if})
//   X_mn(φ,f) = same diagonal − i·sin(φ/2)(I_mn e^{if} + I_nm e^{−if})
// with k,l the two untouched levels.
Matrix4 propagator(const PulseSpec& p);
Matrix4 propagator(Axis axis, int m, int n, double angle, double phase = 0.0);

// Product of two propagators on disjoint transitions (they commute).
// Precondition error if the transitions share a level.
Matrix4 pair_propagator(const PulseSpec& p1, const PulseSpec& p2);

// L_(mn,kl)(α,β) = Y_mn,kl(π/2,π/2) · X_mn,kl(απ/2,βπ/2) · Y_mn,kl(−π/2,−π/2)
// on two disjoint transitions, zero RF phases; α,β = ±1.
Matrix4 ancillary_L(int m, int n, int k, int l, int alpha, int beta);

// M_mn(α) = Y_mn(απ) · X_mn(π), α = ±1.
Matrix4 ancillary_M(int m, int n, int alpha);

// diag(e^{−i ε_m t}) under the system Hamiltonian.
Matrix4 free_evolution(double t, const SystemSpec& sys);

// φ = γ·H1·t_i · |⟨Ψ_m|I_x|Ψ_n⟩|
double angle_from_physical(const PhysicalPulse& p, double matrix_element);

// Ordered product of event propagators, last event leftmost. Gradient
// events are non-unitary and rejected here; density evolution handles them.
Matrix4 sequence_operator(const PulseSequence& seq,
                          const SystemSpec& sys = SystemSpec::defaults());

std::string axis_name(Axis a);

}  // namespace vspin
