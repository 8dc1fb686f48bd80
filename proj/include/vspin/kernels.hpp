#pragma once

#include <cstddef>
#include <string>

// 4x4 complex-double matrix multiply kernels.
//
// Matrices are row-major arrays of 16 complex numbers laid out as 32
// doubles [re0, im0, re1, im1, ...].  The scalar kernel is the reference;
// the AVX2 kernel performs the identical IEEE operation sequence
// (mul/mul/addsub per product term, in-order accumulation, no FMA), so
// both produce bit-identical results.  Dispatch happens once at startup
// from CPU features, overridable with VSPIN_KERNEL=scalar|avx2 or
// set_impl().

namespace vspin::kernels {

enum class Impl { Scalar, Avx2 };

void matmul_scalar(const double* a, const double* b, double* out);
#if defined(__x86_64__) || defined(__i386__)
void matmul_avx2(const double* a, const double* b, double* out);
#endif

bool impl_available(Impl impl);
Impl active_impl();

// Selects a kernel; returns false (and keeps the current one) if the host
// cannot run it.
bool set_impl(Impl impl);

std::string impl_name(Impl impl);

// Multiply through the active kernel.
void matmul(const double* a, const double* b, double* out);

}  // namespace vspin::kernels
