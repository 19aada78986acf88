#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "semireg/kernels/exponent_kernels.hpp"

using namespace semireg::kernels;

namespace {

using Block = std::vector<Exp>;

Block random_block(std::mt19937& rng, unsigned max_exp, double zero_rate) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::bernoulli_distribution z(zero_rate);
  Block b(kMaxVars, 0);
  for (auto& x : b) x = z(rng) ? 0 : static_cast<Exp>(e(rng));
  return b;
}

std::vector<const ExponentKernels*> variants() {
  std::vector<const ExponentKernels*> out;
  for (auto* k : {sse2_kernels(), avx2_kernels(), neon_kernels()})
    if (k) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("scalar kernels") {
  const auto& s = scalar_kernels();
  Block a(kMaxVars, 0), b(kMaxVars, 0), out(kMaxVars, 0);
  a[0] = 2;
  a[1] = 1;
  b[1] = 3;
  b[31] = 65535;
  s.lcm(a.data(), b.data(), out.data());
  CHECK(out[0] == 2);
  CHECK(out[1] == 3);
  CHECK(out[31] == 65535);
  s.gcd(a.data(), b.data(), out.data());
  CHECK(out[1] == 1);
  CHECK(out[31] == 0);
  CHECK_FALSE(s.coprime(a.data(), b.data()));
  CHECK_FALSE(s.divides(a.data(), b.data()));
  CHECK(s.divides(out.data(), a.data()));
}

TEST_CASE("active kernel is one of the compiled variants") {
  const auto& act = active_kernels();
  bool known = &act == &scalar_kernels();
  for (auto* k : variants()) known = known || &act == k;
  CHECK(known);
  MESSAGE("active kernels: " << std::string(act.name));
}

TEST_CASE("vector kernels agree with the scalar reference") {
  std::mt19937 rng(20261018);
  const auto& ref = scalar_kernels();
  for (auto* k : variants()) {
    CAPTURE(k->name);
    for (int trial = 0; trial < 4000; ++trial) {
      unsigned max_exp = trial % 3 == 0 ? 65535 : trial % 3 == 1 ? 3 : 40000;
      Block a = random_block(rng, max_exp, 0.5), b = random_block(rng, max_exp, 0.5);
      if (trial % 5 == 0) b = a;
      if (trial % 7 == 0)
        for (std::size_t i = 0; i < kMaxVars; ++i) b[i] = static_cast<Exp>(std::max<unsigned>(a[i], b[i]));
      Block r1(kMaxVars), r2(kMaxVars);
      ref.lcm(a.data(), b.data(), r1.data());
      k->lcm(a.data(), b.data(), r2.data());
      CHECK(r1 == r2);
      ref.gcd(a.data(), b.data(), r1.data());
      k->gcd(a.data(), b.data(), r2.data());
      CHECK(r1 == r2);
      CHECK(ref.divides(a.data(), b.data()) == k->divides(a.data(), b.data()));
      CHECK(ref.coprime(a.data(), b.data()) == k->coprime(a.data(), b.data()));
    }
  }
}

TEST_CASE("subset lcms agree with the scalar reference") {
  std::mt19937 rng(7);
  const auto& ref = scalar_kernels();
  for (auto* k : variants()) {
    CAPTURE(k->name);
    for (std::size_t n : {1u, 3u, 6u, 10u}) {
      std::vector<Exp> gens;
      for (std::size_t i = 0; i < n; ++i) {
        Block b = random_block(rng, 9, 0.6);
        gens.insert(gens.end(), b.begin(), b.end());
      }
      std::vector<Exp> r1((std::size_t{1} << n) * kMaxVars), r2(r1.size());
      ref.subset_lcms(gens.data(), n, r1.data());
      k->subset_lcms(gens.data(), n, r2.data());
      CHECK(r1 == r2);
      CHECK(std::all_of(r1.begin(), r1.begin() + kMaxVars, [](Exp e) { return e == 0; }));
    }
  }
}
