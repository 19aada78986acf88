#pragma once

#include <cstddef>
#include <cstdint>

namespace semireg::kernels {

// Exponent vectors are fixed 64-byte blocks: kMaxVars unsigned 16-bit lanes,
// unused variables zero. Every kernel reads and writes whole blocks.
inline constexpr std::size_t kMaxVars = 32;
using Exp = std::uint16_t;

struct ExponentKernels {
  const char* name;
  void (*lcm)(const Exp* a, const Exp* b, Exp* out);
  void (*gcd)(const Exp* a, const Exp* b, Exp* out);
  bool (*divides)(const Exp* a, const Exp* b);  // a <= b lanewise
  bool (*coprime)(const Exp* a, const Exp* b);  // min(a, b) == 0 lanewise
  // out[S] = lcm of gens[i] for i in S, for all S < 2^n; out[0] = 0.
  void (*subset_lcms)(const Exp* gens, std::size_t n, Exp* out);
};

const ExponentKernels& scalar_kernels();
// nullptr when the ISA is not compiled in or not supported by this CPU.
const ExponentKernels* sse2_kernels();
const ExponentKernels* avx2_kernels();
const ExponentKernels* neon_kernels();

// Best supported variant, chosen once.
const ExponentKernels& active_kernels();

}  // namespace semireg::kernels
