#include "semireg/kernels/exponent_kernels.hpp"

namespace semireg::kernels {

#if !(defined(__x86_64__) || defined(_M_X64))
const ExponentKernels* sse2_kernels() { return nullptr; }
const ExponentKernels* avx2_kernels() { return nullptr; }
#endif
#if !(defined(__aarch64__) || defined(_M_ARM64))
const ExponentKernels* neon_kernels() { return nullptr; }
#endif

const ExponentKernels& active_kernels() {
  static const ExponentKernels& chosen = [] () -> const ExponentKernels& {
    if (auto* k = avx2_kernels()) return *k;
    if (auto* k = neon_kernels()) return *k;
    if (auto* k = sse2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace semireg::kernels
