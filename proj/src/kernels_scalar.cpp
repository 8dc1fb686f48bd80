#include "vspin/kernels.hpp"

namespace vspin::kernels {

// Reference kernel. Complex products are expanded by hand so the operation
// order (two muls, one add/sub per term, accumulation in k order) is pinned;
// the AVX2 kernel mirrors it exactly.
void matmul_scalar(const double* a, const double* b, double* out) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double re = 0.0, im = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double ar = a[2 * (4 * i + k)];
        const double ai = a[2 * (4 * i + k) + 1];
        const double br = b[2 * (4 * k + j)];
        const double bi = b[2 * (4 * k + j) + 1];
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      out[2 * (4 * i + j)] = re;
      out[2 * (4 * i + j) + 1] = im;
    }
  }
}

}  // namespace vspin::kernels
