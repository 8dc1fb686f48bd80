#include "vspin/pulse.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace vspin {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Angle Angle::pi_over(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator in pi-rational angle");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Angle a;
  a.pi_ = true;
  a.num_ = num;
  a.den_ = den;
  a.rad_ = kPi * static_cast<double>(num) / static_cast<double>(den);
  return a;
}

Angle Angle::radians(double r) {
  if (r == 0.0) return Angle();  // canonical zero
  Angle a;
  a.pi_ = false;
  a.num_ = 0;
  a.den_ = 1;
  a.rad_ = r;
  return a;
}

Angle Angle::operator-() const {
  if (pi_) return pi_over(-num_, den_);
  return radians(-rad_);
}

std::string Angle::str() const {
  std::ostringstream os;
  if (pi_) {
    if (num_ == 0) return "0";
    if (num_ == -1)
      os << "-";
    else if (num_ != 1)
      os << num_;
    os << "pi";
    if (den_ != 1) os << "/" << den_;
  } else {
    os.precision(17);
    os << rad_;
  }
  return os.str();
}

PulseSpec::PulseSpec(Axis ax, int mm, int nn, Angle a, Angle f)
    : axis(ax), m(mm), n(nn), angle(a), phase(f) {
  if (mm < 0 || nn > 3 || mm >= nn)
    throw std::domain_error("pulse transition must satisfy 0 <= m < n <= 3");
}

bool PulseSequence::has_gradient() const {
  for (const auto& ev : events)
    if (std::holds_alternative<GradientEvent>(ev)) return true;
  return false;
}

std::size_t PulseSequence::pulse_count() const {
  std::size_t c = 0;
  for (const auto& ev : events)
    if (std::holds_alternative<PulseSpec>(ev)) ++c;
  return c;
}

Matrix4 propagator(Axis axis, int m, int n, double angle, double phase) {
  if (m < 0 || n > 3 || m >= n)
    throw std::domain_error("pulse transition must satisfy 0 <= m < n <= 3");
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const cd eip = std::polar(1.0, phase);
  const cd eim = std::polar(1.0, -phase);
  Matrix4 u;
  for (int k = 0; k < 4; ++k) u.at(k, k) = (k == m || k == n) ? c : 1.0;
  if (axis == Axis::Y) {
    u.at(n, m) = s * eip;
    u.at(m, n) = -s * eim;
  } else {
    u.at(m, n) = cd(0, -1) * s * eip;
    u.at(n, m) = cd(0, -1) * s * eim;
  }
  return u;
}

Matrix4 propagator(const PulseSpec& p) {
  return propagator(p.axis, p.m, p.n, p.angle.value(), p.phase.value());
}

Matrix4 pair_propagator(const PulseSpec& p1, const PulseSpec& p2) {
  if (p1.m == p2.m || p1.m == p2.n || p1.n == p2.m || p1.n == p2.n)
    throw std::invalid_argument("pair_propagator requires disjoint transitions");
  return propagator(p1) * propagator(p2);
}

Matrix4 ancillary_L(int m, int n, int k, int l, int alpha, int beta) {
  if (alpha * alpha != 1 || beta * beta != 1)
    throw std::domain_error("L arguments must be +1 or -1");
  const Matrix4 open = pair_propagator(PulseSpec(Axis::Y, m, n, Angle::pi_over(1, 2)),
                                       PulseSpec(Axis::Y, k, l, Angle::pi_over(1, 2)));
  const Matrix4 mid = pair_propagator(PulseSpec(Axis::X, m, n, Angle::pi_over(alpha, 2)),
                                      PulseSpec(Axis::X, k, l, Angle::pi_over(beta, 2)));
  const Matrix4 close = pair_propagator(PulseSpec(Axis::Y, m, n, Angle::pi_over(-1, 2)),
                                        PulseSpec(Axis::Y, k, l, Angle::pi_over(-1, 2)));
  return open * mid * close;
}

Matrix4 ancillary_M(int m, int n, int alpha) {
  if (alpha * alpha != 1) throw std::domain_error("M argument must be +1 or -1");
  return propagator(Axis::Y, m, n, alpha * kPi) * propagator(Axis::X, m, n, kPi);
}

Matrix4 free_evolution(double t, const SystemSpec& sys) {
  if (t < 0) throw std::domain_error("free evolution time must be >= 0");
  Matrix4 u;
  for (int k = 0; k < 4; ++k) u.at(k, k) = std::polar(1.0, -sys.energies[k] * t);
  return u;
}

double angle_from_physical(const PhysicalPulse& p, double matrix_element) {
  if (p.gamma < 0 || p.amplitude < 0 || p.duration < 0 || matrix_element < 0)
    throw std::domain_error("physical pulse parameters must be >= 0");
  return p.gamma * p.amplitude * p.duration * matrix_element;
}

Matrix4 sequence_operator(const PulseSequence& seq, const SystemSpec& sys) {
  Matrix4 u = Matrix4::identity();
  for (const auto& ev : seq.events) {
    if (std::holds_alternative<GradientEvent>(ev))
      throw std::invalid_argument(
          "gradient events are non-unitary; evolve a density matrix instead");
    if (const auto* p = std::get_if<PulseSpec>(&ev))
      u = propagator(*p) * u;
    else
      u = free_evolution(std::get<DelayEvent>(ev).seconds, sys) * u;
  }
  return u;
}

std::string axis_name(Axis a) { return a == Axis::X ? "X" : "Y"; }

}  // namespace vspin
