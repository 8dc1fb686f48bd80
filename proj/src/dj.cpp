#include "vspin/dj.hpp"

#include <cmath>
#include <vector>

namespace vspin {

GateId b_gate_id(BoolFn2 f) {
  if (!f.f0 && !f.f1) return GateId::B00;
  if (!f.f0 && f.f1) return GateId::B01;
  if (f.f0 && !f.f1) return GateId::B10;
  return GateId::B11;
}

Ket4 intermediate_state(BoolFn2 f) {
  const Matrix4 u = oracle(f).matrix * gate(GateId::h1S) * gate(GateId::h1R);
  return apply(u, Ket4::basis(1));
}

namespace {

struct Step {
  Matrix4 u;
  bool is_oracle;
};

std::vector<Step> plan(BoolFn2 f, DjMode mode) {
  switch (mode) {
    case DjMode::GateCircuit:
      return {{gate(GateId::h1R), false},
              {gate(GateId::h1S), false},
              {oracle(f).matrix, true},
              {gate(GateId::H2), false}};
    case DjMode::SingleOperator:
      return {{b_operator(f), true}};
    case DjMode::CompiledPulses:
      return {{sequence_operator(compile(b_gate_id(f))), true}};
  }
  throw std::domain_error("unknown mode");
}

// transposition that relabels physical level k as logical level 1
Matrix4 relabel_matrix(int k) {
  Matrix4 t = Matrix4::identity();
  if (k != 1) {
    t.at(1, 1) = 0;
    t.at(k, k) = 0;
    t.at(1, k) = 1;
    t.at(k, 1) = 1;
  }
  return t;
}

}  // namespace

DjResult run_dj(BoolFn2 f, DjMode mode, StateModel model, const SystemSpec& sys,
                double beta) {
  const auto steps = plan(f, mode);
  Matrix4 u_total = Matrix4::identity();
  int oracle_count = 0;
  for (const auto& s : steps) {
    u_total = s.u * u_total;
    if (s.is_oracle) ++oracle_count;
  }

  int prepared_level = 1;
  double alpha = 1.0;
  double common = 0.0;
  DensityMatrix rho = DensityMatrix::pure(Ket4::basis(1));
  if (model == StateModel::PseudoPure) {
    const PseudoPureState prep = prepare_pseudo_pure(sys, beta);
    prepared_level = prep.distinguished_level;
    alpha = prep.alpha;
    common = prep.common;
    const Matrix4 t = relabel_matrix(prep.distinguished_level);
    rho = DensityMatrix(t * prep.rho.matrix() * t.adjoint());
  }

  const DensityMatrix final_rho(u_total * rho.matrix() * u_total.adjoint());
  const Ket4 final_ket = apply(u_total, Ket4::basis(1));

  // weight of each level in the (deviation) population
  std::array<double, 4> weights{};
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    weights[k] = model == StateModel::Pure
                     ? std::norm(final_ket[k])
                     : (final_rho.population(k) - common) / alpha;
    total += weights[k];
  }

  int winner = 0;
  for (int k = 1; k < 4; ++k)
    if (weights[k] > weights[winner]) winner = k;
  if (!(weights[winner] >= 0.99 * total) || (winner != 1 && winner != 3))
    throw ClassificationError("final weight is not concentrated on level 1 or 3",
                              weights);

  const cd amp = final_ket[winner];
  DjResult r{
      f,
      mode,
      model,
      winner == 3 ? Classification::Balanced : Classification::Constant,
      final_ket,
      final_rho,
      std::abs(amp) > 0 ? amp / std::abs(amp) : cd(1.0, 0.0),
      fid_amplitude(final_rho, 1, 2),
      weights,
      oracle_count,
      prepared_level,
      alpha,
  };
  return r;
}

std::string dj_mode_name(DjMode m) {
  switch (m) {
    case DjMode::GateCircuit:
      return "gate";
    case DjMode::SingleOperator:
      return "single";
    case DjMode::CompiledPulses:
      return "pulses";
  }
  return "?";
}

std::string classification_name(Classification c) {
  return c == Classification::Balanced ? "balanced" : "constant";
}

}  // namespace vspin
