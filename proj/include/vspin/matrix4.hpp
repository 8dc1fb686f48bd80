#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace vspin {

using cd = std::complex<double>;

// Identity checks on operators built here involve only {0, ±1, ±i, ±1/√2,
// cos, sin}; 1e-12 is generous for products of a handful of such factors.
inline constexpr double kUnitaryTol = 1e-12;
// Compiled sequences multiply up to ~10 propagators; verification absorbs
// the extra accumulation.
inline constexpr double kVerifyTol = 1e-10;

// Dense 4x4 complex matrix, the carrier for every operator, propagator and
// density matrix in the library. Immutable value semantics: operations
// return new matrices, so values can be shared freely across threads.
class Matrix4 {
 public:
  Matrix4() : e_{} {}

  static Matrix4 zero() { return Matrix4(); }

  static Matrix4 identity() {
    Matrix4 m;
    for (int k = 0; k < 4; ++k) m.at(k, k) = 1.0;
    return m;
  }

  // Projection operator I_mn: 1 at row m, column n, zero elsewhere.
  static Matrix4 unit(int m, int n) {
    if (m < 0 || m > 3 || n < 0 || n > 3)
      throw std::domain_error("projection operator index out of range 0..3");
    Matrix4 r;
    r.at(m, n) = 1.0;
    return r;
  }

  static Matrix4 diag(cd a, cd b, cd c, cd d) {
    Matrix4 m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
  }

  cd& at(int r, int c) { return e_[4 * r + c]; }
  const cd& at(int r, int c) const { return e_[4 * r + c]; }

  const double* raw() const { return reinterpret_cast<const double*>(e_.data()); }
  double* raw() { return reinterpret_cast<double*>(e_.data()); }

  Matrix4 operator*(const Matrix4& o) const;
  Matrix4 operator+(const Matrix4& o) const;
  Matrix4 operator-(const Matrix4& o) const;
  Matrix4 operator*(cd s) const;
  friend Matrix4 operator*(cd s, const Matrix4& m) { return m * s; }
  Matrix4 operator-() const { return *this * cd(-1.0, 0.0); }

  bool operator==(const Matrix4& o) const { return e_ == o.e_; }

  // Conjugate transpose; exact (no arithmetic beyond conjugation).
  Matrix4 adjoint() const;

  cd trace() const { return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3); }

  // max-norm of the entrywise difference
  double max_abs_diff(const Matrix4& o) const;
  double max_abs() const;

  bool all_finite() const;
  bool is_unitary(double tol = kUnitaryTol) const;
  bool is_hermitian(double tol = kUnitaryTol) const;

 private:
  std::array<cd, 16> e_;  // row-major
};

// 4-component state vector over the |Ψ0⟩..|Ψ3⟩ basis.
class Ket4 {
 public:
  Ket4() : a_{} {}
  explicit Ket4(std::array<cd, 4> a) : a_(a) {}

  static Ket4 basis(int k) {
    if (k < 0 || k > 3) throw std::domain_error("basis index out of range 0..3");
    Ket4 v;
    v.a_[k] = 1.0;
    return v;
  }

  cd& operator[](int k) { return a_[k]; }
  const cd& operator[](int k) const { return a_[k]; }

  double norm() const;
  bool is_normalized(double tol = kUnitaryTol) const;

  friend cd inner(const Ket4& u, const Ket4& v);    // ⟨u|v⟩
  friend Ket4 apply(const Matrix4& m, const Ket4& v);
  Matrix4 projector_onto() const;                   // |v⟩⟨v|

 private:
  std::array<cd, 4> a_;
};

// I_mn with range checking (domain error outside 0..3).
inline Matrix4 projector(int m, int n) { return Matrix4::unit(m, n); }

struct PhaseMismatchError : std::runtime_error {
  explicit PhaseMismatchError(double d);
  double distance;
};

// 1 - |tr(u†v)|/4. Zero iff v = e^{iα}u; 1 when the orbits are orthogonal
// in the trace sense. Both arguments must be unitary.
double phase_distance(const Matrix4& u, const Matrix4& v);

// The unit scalar c = tr(u†v)/|tr(u†v)| with v ≈ c·u. Throws
// PhaseMismatchError (carrying the distance) unless phase_distance(u,v) ≤ tol.
cd global_phase(const Matrix4& u, const Matrix4& v, double tol = kVerifyTol);

}  // namespace vspin
