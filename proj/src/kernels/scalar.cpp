#include <algorithm>

#include "semireg/kernels/exponent_kernels.hpp"

namespace semireg::kernels {

namespace {

void lcm_scalar(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = std::max(a[i], b[i]);
}

void gcd_scalar(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = std::min(a[i], b[i]);
}

bool divides_scalar(const Exp* a, const Exp* b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime_scalar(const Exp* a, const Exp* b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

void subset_lcms_scalar(const Exp* gens, std::size_t n, Exp* out) {
  std::fill(out, out + kMaxVars, Exp{0});
  for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    lcm_scalar(out + (s & (s - 1)) * kMaxVars, gens + low * kMaxVars, out + s * kMaxVars);
  }
}

}  // namespace

const ExponentKernels& scalar_kernels() {
  static const ExponentKernels k{"scalar", lcm_scalar, gcd_scalar, divides_scalar, coprime_scalar, subset_lcms_scalar};
  return k;
}

}  // namespace semireg::kernels
