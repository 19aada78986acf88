#include <arm_neon.h>

#include <algorithm>

#include "semireg/kernels/exponent_kernels.hpp"

namespace semireg::kernels {

namespace {

constexpr std::size_t kLanes = kMaxVars / 8;

void lcm_neon(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kLanes; ++i) vst1q_u16(out + 8 * i, vmaxq_u16(vld1q_u16(a + 8 * i), vld1q_u16(b + 8 * i)));
}

void gcd_neon(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kLanes; ++i) vst1q_u16(out + 8 * i, vminq_u16(vld1q_u16(a + 8 * i), vld1q_u16(b + 8 * i)));
}

bool divides_neon(const Exp* a, const Exp* b) {
  uint16x8_t acc = vdupq_n_u16(0);
  for (std::size_t i = 0; i < kLanes; ++i) acc = vorrq_u16(acc, vqsubq_u16(vld1q_u16(a + 8 * i), vld1q_u16(b + 8 * i)));
  return vmaxvq_u16(acc) == 0;
}

bool coprime_neon(const Exp* a, const Exp* b) {
  uint16x8_t acc = vdupq_n_u16(0);
  for (std::size_t i = 0; i < kLanes; ++i) acc = vorrq_u16(acc, vminq_u16(vld1q_u16(a + 8 * i), vld1q_u16(b + 8 * i)));
  return vmaxvq_u16(acc) == 0;
}

void subset_lcms_neon(const Exp* gens, std::size_t n, Exp* out) {
  std::fill(out, out + kMaxVars, Exp{0});
  for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    lcm_neon(out + (s & (s - 1)) * kMaxVars, gens + low * kMaxVars, out + s * kMaxVars);
  }
}

}  // namespace

const ExponentKernels* neon_kernels() {
  static const ExponentKernels k{"neon", lcm_neon, gcd_neon, divides_neon, coprime_neon, subset_lcms_neon};
  return &k;
}

}  // namespace semireg::kernels
