#include <emmintrin.h>

#include <algorithm>

#include "semireg/kernels/exponent_kernels.hpp"

namespace semireg::kernels {

namespace {

constexpr std::size_t kLanes = kMaxVars / 8;

// SSE2 has no unsigned 16-bit min/max; build them from saturating subtraction.
inline __m128i max_u16(__m128i a, __m128i b) { return _mm_add_epi16(b, _mm_subs_epu16(a, b)); }
inline __m128i min_u16(__m128i a, __m128i b) { return _mm_sub_epi16(a, _mm_subs_epu16(a, b)); }

inline __m128i load(const Exp* p, std::size_t i) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p) + i); }
inline void store(Exp* p, std::size_t i, __m128i v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p) + i, v); }

void lcm_sse2(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kLanes; ++i) store(out, i, max_u16(load(a, i), load(b, i)));
}

void gcd_sse2(const Exp* a, const Exp* b, Exp* out) {
  for (std::size_t i = 0; i < kLanes; ++i) store(out, i, min_u16(load(a, i), load(b, i)));
}

bool divides_sse2(const Exp* a, const Exp* b) {
  __m128i acc = _mm_setzero_si128();
  for (std::size_t i = 0; i < kLanes; ++i) acc = _mm_or_si128(acc, _mm_subs_epu16(load(a, i), load(b, i)));
  return _mm_movemask_epi8(_mm_cmpeq_epi16(acc, _mm_setzero_si128())) == 0xFFFF;
}

bool coprime_sse2(const Exp* a, const Exp* b) {
  __m128i acc = _mm_setzero_si128();
  for (std::size_t i = 0; i < kLanes; ++i) acc = _mm_or_si128(acc, min_u16(load(a, i), load(b, i)));
  return _mm_movemask_epi8(_mm_cmpeq_epi16(acc, _mm_setzero_si128())) == 0xFFFF;
}

void subset_lcms_sse2(const Exp* gens, std::size_t n, Exp* out) {
  std::fill(out, out + kMaxVars, Exp{0});
  for (std::size_t s = 1; s < (std::size_t{1} << n); ++s) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    lcm_sse2(out + (s & (s - 1)) * kMaxVars, gens + low * kMaxVars, out + s * kMaxVars);
  }
}

}  // namespace

const ExponentKernels* sse2_kernels() {
  static const ExponentKernels k{"sse2", lcm_sse2, gcd_sse2, divides_sse2, coprime_sse2, subset_lcms_sse2};
  return &k;
}

}  // namespace semireg::kernels
