#include <cstring>
#include <doctest.h>
#include <random>

#include "test_support.hpp"
#include "vspin/kernels.hpp"
#include "vspin/matrix4.hpp"

using namespace vspin;

namespace {

struct KernelGuard {
  kernels::Impl saved = kernels::active_impl();
  ~KernelGuard() { kernels::set_impl(saved); }
};

}  // namespace

TEST_CASE("scalar kernel matches the textbook reference") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Matrix4 a = testgen::random_matrix(rng);
    const Matrix4 b = testgen::random_matrix(rng);
    Matrix4 out;
    kernels::matmul_scalar(a.raw(), b.raw(), out.raw());
    const auto expect = refimpl::mul(refimpl::from_lib(a), refimpl::from_lib(b));
    CHECK(refimpl::max_diff(expect, out) < 1e-13);
  }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("avx2 kernel is bit-identical to the scalar kernel") {
  if (!kernels::impl_available(kernels::Impl::Avx2)) {
    MESSAGE("avx2 unavailable on this host, skipping");
    return;
  }
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Matrix4 a = testgen::random_matrix(rng);
    const Matrix4 b = testgen::random_matrix(rng);
    Matrix4 s, v;
    kernels::matmul_scalar(a.raw(), b.raw(), s.raw());
    kernels::matmul_avx2(a.raw(), b.raw(), v.raw());
    REQUIRE(std::memcmp(s.raw(), v.raw(), 32 * sizeof(double)) == 0);
  }
}
#endif

TEST_CASE("kernel selection") {
  KernelGuard guard;
  CHECK(kernels::impl_available(kernels::Impl::Scalar));
  REQUIRE(kernels::set_impl(kernels::Impl::Scalar));
  CHECK(kernels::active_impl() == kernels::Impl::Scalar);
  if (kernels::impl_available(kernels::Impl::Avx2)) {
    REQUIRE(kernels::set_impl(kernels::Impl::Avx2));
    CHECK(kernels::active_impl() == kernels::Impl::Avx2);
  }
  CHECK(kernels::impl_name(kernels::Impl::Scalar) == "scalar");
  CHECK(kernels::impl_name(kernels::Impl::Avx2) == "avx2");
}

TEST_CASE("Matrix4 multiply agrees across kernels") {
  KernelGuard guard;
  std::mt19937_64 rng(13);
  const Matrix4 a = testgen::random_matrix(rng);
  const Matrix4 b = testgen::random_matrix(rng);
  REQUIRE(kernels::set_impl(kernels::Impl::Scalar));
  const Matrix4 s = a * b;
  if (kernels::impl_available(kernels::Impl::Avx2)) {
    REQUIRE(kernels::set_impl(kernels::Impl::Avx2));
    const Matrix4 v = a * b;
    CHECK(s.max_abs_diff(v) == 0.0);
  }
}
