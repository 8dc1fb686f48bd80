#include <doctest.h>
#include <random>

#include "test_support.hpp"
#include "vspin/gates.hpp"
#include "vspin/matrix4.hpp"
#include "vspin/pulse.hpp"

using namespace vspin;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("projection operators") {
  CHECK(projector(0, 0) == Matrix4::diag(1, 0, 0, 0));
  CHECK(projector(0, 1) * projector(1, 2) == projector(0, 2));
  CHECK(projector(0, 1) * projector(2, 3) == Matrix4::zero());
  CHECK_THROWS_AS(projector(4, 0), std::domain_error);
  CHECK_THROWS_AS(projector(0, -1), std::domain_error);
}

TEST_CASE("projection algebra is exact over all 256 index combinations") {
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          const Matrix4 lhs = projector(k, l) * projector(m, n);
          const Matrix4 rhs = l == m ? projector(k, n) : Matrix4::zero();
          CHECK(lhs == rhs);  // integer-exact
        }
}

TEST_CASE("completeness: sum of I_mm is the identity, exactly") {
  Matrix4 sum;
  for (int m = 0; m < 4; ++m) sum = sum + projector(m, m);
  CHECK(sum == Matrix4::identity());
}

TEST_CASE("multiply") {
  std::mt19937_64 rng(21);
  SUBCASE("identity is neutral") {
    for (int t = 0; t < 20; ++t) {
      const Matrix4 a = testgen::random_matrix(rng);
      CHECK((Matrix4::identity() * a).max_abs_diff(a) == 0.0);
      CHECK((a * Matrix4::identity()).max_abs_diff(a) == 0.0);
    }
  }
  SUBCASE("associativity to 1e-14 at operator scale") {
    for (int t = 0; t < 50; ++t) {
      const Matrix4 a = testgen::random_unitary(rng);
      const Matrix4 b = testgen::random_unitary(rng);
      const Matrix4 c = testgen::random_unitary(rng);
      CHECK(((a * b) * c).max_abs_diff(a * (b * c)) < 1e-14);
    }
    // general matrices: relative to the magnitudes involved
    for (int t = 0; t < 50; ++t) {
      const Matrix4 a = testgen::random_matrix(rng);
      const Matrix4 b = testgen::random_matrix(rng);
      const Matrix4 c = testgen::random_matrix(rng);
      const double scale = a.max_abs() * b.max_abs() * c.max_abs();
      CHECK(((a * b) * c).max_abs_diff(a * (b * c)) < 1e-14 * scale);
    }
  }
  SUBCASE("pair of pi pulses on disjoint transitions") {
    const Matrix4 lhs = propagator(Axis::X, 0, 2, kPi) * propagator(Axis::X, 1, 3, kPi);
    const Matrix4 rhs =
        (projector(0, 2) + projector(2, 0) + projector(1, 3) + projector(3, 1)) *
        cd(0, -1);
    CHECK(lhs.max_abs_diff(rhs) < 1e-15);
  }
  SUBCASE("inverse rotation") {
    const Matrix4 u = propagator(Axis::Y, 0, 2, kPi / 2) * propagator(Axis::Y, 0, 2, -kPi / 2);
    CHECK(u.max_abs_diff(Matrix4::identity()) < 1e-15);
  }
}

TEST_CASE("adjoint") {
  std::mt19937_64 rng(22);
  const Matrix4 a = testgen::random_matrix(rng);
  CHECK(a.adjoint().adjoint() == a);  // exact involution
  CHECK(Matrix4::diag(cd(0, 1), 1, 1, 1).adjoint() == Matrix4::diag(cd(0, -1), 1, 1, 1));
  CHECK(projector(0, 1).adjoint() == projector(1, 0));
  // adjoint of a y-rotation is the rotation by the opposite angle
  std::uniform_real_distribution<double> ang(-6.0, 6.0);
  for (int t = 0; t < 30; ++t) {
    const double phi = ang(rng), f = ang(rng) / 2;
    CHECK(propagator(Axis::Y, 1, 3, phi, f).adjoint().max_abs_diff(
              propagator(Axis::Y, 1, 3, -phi, f)) < 1e-15);
  }
}

TEST_CASE("phase_distance") {
  std::mt19937_64 rng(23);
  SUBCASE("zero on the phase orbit") {
    const Matrix4 u = testgen::random_unitary(rng);
    CHECK(phase_distance(u, u * std::polar(1.0, kPi / 7)) < 1e-15);
  }
  SUBCASE("one for traceless targets") {
    CHECK(phase_distance(Matrix4::identity(), gate(GateId::NOT1)) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("pulse pair realization sits on the NOT1 orbit") {
    const Matrix4 seq =
        propagator(Axis::X, 0, 2, kPi) * propagator(Axis::X, 1, 3, kPi) * cd(0, 1);
    CHECK(phase_distance(seq, gate(GateId::NOT1)) < 1e-15);
  }
  SUBCASE("symmetry and left-multiplication invariance") {
    for (int t = 0; t < 20; ++t) {
      const Matrix4 u = testgen::random_unitary(rng);
      const Matrix4 v = testgen::random_unitary(rng);
      const Matrix4 w = testgen::random_unitary(rng);
      const double d = phase_distance(u, v);
      CHECK(phase_distance(v, u) == doctest::Approx(d).epsilon(1e-12));
      CHECK(phase_distance(w * u, w * v) == doctest::Approx(d).epsilon(1e-12));
    }
  }
  SUBCASE("rejects non-unitary input") {
    CHECK_THROWS_AS(phase_distance(Matrix4::zero(), Matrix4::identity()),
                    std::invalid_argument);
  }
}

TEST_CASE("global_phase") {
  std::mt19937_64 rng(24);
  const Matrix4 u = testgen::random_unitary(rng);
  CHECK(std::abs(global_phase(u, u * cd(0, 1)) - cd(0, 1)) < 1e-14);
  // prefactor of the NOT2 realization
  const Matrix4 seq = propagator(Axis::X, 0, 1, kPi) * propagator(Axis::X, 2, 3, kPi);
  CHECK(std::abs(global_phase(seq, gate(GateId::NOT2)) - cd(0, 1)) < 1e-14);
  // mismatched operators raise, carrying the distance
  try {
    global_phase(Matrix4::identity(), gate(GateId::NOT1));
    FAIL("expected PhaseMismatchError");
  } catch (const PhaseMismatchError& e) {
    CHECK(e.distance == doctest::Approx(1.0));
  }
}

TEST_CASE("unitarity of built operators") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const Matrix4 u = testgen::random_unitary(rng);
    CHECK((u.adjoint() * u).max_abs_diff(Matrix4::identity()) <= 1e-12);
  }
}

TEST_CASE("Ket4 basics") {
  const Ket4 k1 = Ket4::basis(1);
  CHECK(k1.is_normalized());
  CHECK(k1[1] == cd(1, 0));
  CHECK_THROWS_AS(Ket4::basis(5), std::domain_error);
  CHECK(std::abs(inner(k1, Ket4::basis(1)) - cd(1, 0)) == 0.0);
  CHECK(std::abs(inner(k1, Ket4::basis(2))) == 0.0);
  const Ket4 moved = apply(gate(GateId::NOT1), k1);
  CHECK(std::abs(moved[3] - cd(1, 0)) == 0.0);  // level 1 -> level 3
  const Matrix4 p = k1.projector_onto();
  CHECK(p == projector(1, 1));
}

TEST_CASE("finiteness checks") {
  Matrix4 bad;
  bad.at(0, 0) = cd(std::numeric_limits<double>::infinity(), 0);
  CHECK_FALSE(bad.all_finite());
  CHECK_FALSE(bad.is_unitary());
  CHECK(Matrix4::identity().all_finite());
}
