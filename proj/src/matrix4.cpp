#include "vspin/matrix4.hpp"

#include <cmath>
#include <string>

#include "vspin/kernels.hpp"

namespace vspin {

Matrix4 Matrix4::operator*(const Matrix4& o) const {
  Matrix4 r;
  kernels::matmul(raw(), o.raw(), r.raw());
  return r;
}

Matrix4 Matrix4::operator+(const Matrix4& o) const {
  Matrix4 r;
  for (int k = 0; k < 16; ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

Matrix4 Matrix4::operator-(const Matrix4& o) const {
  Matrix4 r;
  for (int k = 0; k < 16; ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

Matrix4 Matrix4::operator*(cd s) const {
  Matrix4 r;
  for (int k = 0; k < 16; ++k) r.e_[k] = e_[k] * s;
  return r;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

double Matrix4::max_abs_diff(const Matrix4& o) const {
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) worst = std::max(worst, std::abs(e_[k] - o.e_[k]));
  return worst;
}

double Matrix4::max_abs() const {
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) worst = std::max(worst, std::abs(e_[k]));
  return worst;
}

bool Matrix4::all_finite() const {
  for (const cd& z : e_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool Matrix4::is_unitary(double tol) const {
  return all_finite() && (adjoint() * *this).max_abs_diff(identity()) <= tol;
}

bool Matrix4::is_hermitian(double tol) const {
  return all_finite() && max_abs_diff(adjoint()) <= tol;
}

double Ket4::norm() const {
  double s = 0.0;
  for (const cd& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool Ket4::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

cd inner(const Ket4& u, const Ket4& v) {
  cd s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::conj(u.a_[k]) * v.a_[k];
  return s;
}

Ket4 apply(const Matrix4& m, const Ket4& v) {
  Ket4 r;
  for (int i = 0; i < 4; ++i) {
    cd s = 0.0;
    for (int j = 0; j < 4; ++j) s += m.at(i, j) * v.a_[j];
    r.a_[i] = s;
  }
  return r;
}

Matrix4 Ket4::projector_onto() const {
  Matrix4 p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p.at(i, j) = a_[i] * std::conj(a_[j]);
  return p;
}

PhaseMismatchError::PhaseMismatchError(double d)
    : std::runtime_error("operators are not equal up to a global phase (distance " +
                         std::to_string(d) + ")"),
      distance(d) {}

double phase_distance(const Matrix4& u, const Matrix4& v) {
  if (!u.is_unitary(kVerifyTol) || !v.is_unitary(kVerifyTol))
    throw std::invalid_argument("phase_distance requires unitary operators");
  return 1.0 - std::abs((u.adjoint() * v).trace()) / 4.0;
}

cd global_phase(const Matrix4& u, const Matrix4& v, double tol) {
  const double d = phase_distance(u, v);
  if (d > tol) throw PhaseMismatchError(d);
  const cd t = (u.adjoint() * v).trace();
  return t / std::abs(t);
}

}  // namespace vspin
