#include "vspin/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vspin {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

DensityMatrix::DensityMatrix(const Matrix4& rho) : rho_(rho) {
  if (!rho.all_finite()) throw StateInvariantError("density matrix has non-finite entries");
  if (!rho.is_hermitian(kDensityTol))
    throw StateInvariantError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - cd(1.0, 0.0)) > kDensityTol)
    throw StateInvariantError("density matrix trace differs from 1");
  const auto ev = hermitian_eigenvalues(rho);
  if (ev[0] < kEigenvalueFloor)
    throw StateInvariantError("density matrix has eigenvalue " + std::to_string(ev[0]) +
                              " below the floor");
}

DensityMatrix DensityMatrix::pure(const Ket4& psi) {
  if (!psi.is_normalized())
    throw StateInvariantError("pure state construction requires a normalized ket");
  return DensityMatrix(psi.projector_onto());
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Matrix4::identity() * cd(0.25, 0.0));
}

std::array<double, 4> DensityMatrix::populations() const {
  return {population(0), population(1), population(2), population(3)};
}

Matrix4 DensityMatrix::deviation() const {
  return rho_ - Matrix4::identity() * (rho_.trace() / 4.0);
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4& h) {
  // cyclic Jacobi on the Hermitian matrix; 4x4 converges in a few sweeps
  Matrix4 a = h;
  for (int sweep = 0; sweep < 32; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(a.at(p, q)));
    if (off < 1e-15) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const cd apq = a.at(p, q);
        if (std::abs(apq) < 1e-18) continue;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        // unitary 2x2 rotation [c, -conj(s); s, c] annihilating (p,q):
        // tan(2θ) = 2|a_pq| / (a_pp - a_qq), s = sinθ·e^{-i·arg(a_pq)}
        const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), app - aqq);
        const double c = std::cos(theta);
        const cd s = std::polar(std::sin(theta), -std::arg(apq));
        Matrix4 r = Matrix4::identity();
        r.at(p, p) = c;
        r.at(q, q) = c;
        r.at(p, q) = -std::conj(s);
        r.at(q, p) = s;
        a = r.adjoint() * a * r;
      }
    }
  }
  std::array<double, 4> ev{a.at(0, 0).real(), a.at(1, 1).real(), a.at(2, 2).real(),
                           a.at(3, 3).real()};
  std::sort(ev.begin(), ev.end());
  return ev;
}

DensityMatrix thermal_state(const SystemSpec& sys, double beta, bool linearize) {
  sys.validate();
  if (beta < 0) throw std::domain_error("inverse temperature must be >= 0");
  double mean = 0.0;
  for (double e : sys.energies) mean += e / 4.0;
  Matrix4 rho;
  if (linearize) {
    for (int k = 0; k < 4; ++k) rho.at(k, k) = (1.0 - beta * (sys.energies[k] - mean)) / 4.0;
  } else {
    double z = 0.0;
    std::array<double, 4> w;
    for (int k = 0; k < 4; ++k) {
      const double expo = -beta * (sys.energies[k] - mean);
      if (expo > 700.0)
        throw std::domain_error(
            "exact thermal state overflows at this beta; use the linearized form");
      w[k] = std::exp(expo);
      z += w[k];
    }
    for (int k = 0; k < 4; ++k) rho.at(k, k) = w[k] / z;
  }
  return DensityMatrix(rho);
}

DensityMatrix crush(const DensityMatrix& rho) {
  Matrix4 d;
  for (int k = 0; k < 4; ++k) d.at(k, k) = rho.matrix().at(k, k);
  return DensityMatrix(d);
}

namespace {

DensityMatrix conjugate(const DensityMatrix& rho, const Matrix4& u) {
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

}  // namespace

DensityMatrix evolve(const DensityMatrix& rho, const PulseSequence& seq,
                     const SystemSpec& sys) {
  DensityMatrix state = rho;
  for (const auto& ev : seq.events) {
    if (const auto* p = std::get_if<PulseSpec>(&ev))
      state = conjugate(state, propagator(*p));
    else if (std::holds_alternative<GradientEvent>(ev))
      state = crush(state);
    else
      state = conjugate(state, free_evolution(std::get<DelayEvent>(ev).seconds, sys));
  }
  return state;
}

PseudoPureState prepare_pseudo_pure(const SystemSpec& sys, double beta,
                                    GradientOrder order) {
  if (!(beta > 0)) throw std::domain_error("pseudo-pure preparation requires beta > 0");
  const DensityMatrix thermal = thermal_state(sys, beta, /*linearize=*/true);

  PulseSequence seq;
  if (order == GradientOrder::GradientFirst) seq << GradientEvent{};
  seq << PulseSpec(Axis::X, 0, 2, Angle::pi_over(1, 2))
      << PulseSpec(Axis::X, 2, 3, Angle::pi());
  if (order == GradientOrder::PulsesFirst) seq << GradientEvent{};

  const DensityMatrix out = evolve(thermal, seq, sys);
  const auto pops = out.populations();

  double offdiag = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(out.matrix().at(i, j)));
  if (offdiag > kDensityTol)
    throw PreparationError("prepared state is not diagonal (max coherence " +
                               std::to_string(offdiag) + ")",
                           pops);

  // exactly one level must stand apart, the other three mutually equal
  constexpr double tol = 1e-10;
  for (int k = 0; k < 4; ++k) {
    std::array<double, 3> rest;
    int idx = 0;
    for (int j = 0; j < 4; ++j)
      if (j != k) rest[idx++] = pops[j];
    const bool rest_equal = std::abs(rest[0] - rest[1]) <= tol &&
                            std::abs(rest[0] - rest[2]) <= tol &&
                            std::abs(rest[1] - rest[2]) <= tol;
    const bool distinct = std::abs(pops[k] - rest[0]) > tol;
    if (rest_equal && distinct) {
      const double common = (rest[0] + rest[1] + rest[2]) / 3.0;
      return PseudoPureState{out, k, pops[k] - common, common, order};
    }
  }
  throw PreparationError(
      "no single distinguished level in the prepared diagonal (degenerate "
      "energies or beta)",
      pops);
}

double fid_amplitude(const DensityMatrix& rho, int m, int n) {
  if (m >= n) throw std::domain_error("readout transition must satisfy m < n");
  const Matrix4 u = propagator(Axis::X, m, n, kPi / 2);
  const Matrix4 after = u * rho.matrix() * u.adjoint();
  return std::abs(after.at(m, n));
}

}  // namespace vspin
