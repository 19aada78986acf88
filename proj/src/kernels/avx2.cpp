#include <immintrin.h>

#include <algorithm>

#include "semireg/kernels/exponent_kernels.hpp"

namespace semireg::kernels {

namespace {

constexpr std::size_t kLanes = kMaxVars / 16;

inline __m256i load(const Exp* p, std::size_t i) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p) + i);
}
inline void store(Exp* p, std::size_t i, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p) + i, v); }

void lcm_avx2(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kLanes; ++i) store(out, i, _mm256_max_epu16(load(a, i), load(b, i)));
}

void gcd_avx2(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kLanes; ++i) store(out, i, _mm256_min_epu16(load(a, i), load(b, i)));
}

bool divides_avx2(const Exp* a, const Exp* b) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < kLanes; ++i) acc = _mm256_or_si256(acc, _mm256_subs_epu16(load(a, i), load(b, i)));
  return _mm256_testz_si256(acc, acc);
}

bool coprime_avx2(const Exp* a, const Exp* b) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t i = 0; i < kLanes; ++i) acc = _mm256_or_si256(acc, _mm256_min_epu16(load(a, i), load(b, i)));
  return _mm256_testz_si256(acc, acc);
}

void subset_lcms_avx2(const Exp* gens, std::size_t n, Exp* out) {
  std::fill(out, out + kMaxVars, Exp{0});
  for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    const Exp* prev = out + (s & (s - 1)) * kMaxVars;
    const Exp* g = gens + low * kMaxVars;
    Exp* dst = out + s * kMaxVars;
    store(dst, 0, _mm256_max_epu16(load(prev, 0), load(g, 0)));
    store(dst, 1, _mm256_max_epu16(load(prev, 1), load(g, 1)));
  }
}

}  // namespace

const ExponentKernels* avx2_kernels() {
  static const ExponentKernels k{"avx2", lcm_avx2, gcd_avx2, divides_avx2, coprime_avx2, subset_lcms_avx2};
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  return &k;
}

}  // namespace semireg::kernels
