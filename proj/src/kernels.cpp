#include "vspin/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace vspin::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  // TODO: NEON variant for aarch64 behind the same dispatch
  return false;
#endif
}

Impl pick_default() {
  if (const char* env = std::getenv("VSPIN_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Impl::Scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Impl::Avx2;
  }
  return cpu_has_avx2() ? Impl::Avx2 : Impl::Scalar;
}

std::atomic<Impl> g_impl{pick_default()};

}  // namespace

bool impl_available(Impl impl) {
  switch (impl) {
    case Impl::Scalar:
      return true;
    case Impl::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

Impl active_impl() { return g_impl.load(std::memory_order_relaxed); }

bool set_impl(Impl impl) {
  if (!impl_available(impl)) return false;
  g_impl.store(impl, std::memory_order_relaxed);
  return true;
}

std::string impl_name(Impl impl) {
  return impl == Impl::Avx2 ? "avx2" : "scalar";
}

void matmul(const double* a, const double* b, double* out) {
#if defined(__x86_64__) || defined(__i386__)
  if (g_impl.load(std::memory_order_relaxed) == Impl::Avx2) {
    matmul_avx2(a, b, out);
    return;
  }
#endif
  matmul_scalar(a, b, out);
}

}  // namespace vspin::kernels
