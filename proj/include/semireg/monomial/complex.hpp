#pragma once

#include <cstdint>
#include <vector>

#include "semireg/monomial/monomial.hpp"

namespace semireg {

inline constexpr std::size_t kDefaultGeneratorCap = 12;

struct ComplexEntry {
  std::size_t row;  // basis index in T_{i-1}
  std::size_t col;  // basis index in T_i
  int sign;
  Monomial coefficient;
};

// T_0 <- T_1 <- ... <- T_n with basis e_D for subsets D of the generators.
struct FreeComplex {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<ComplexEntry>> differentials;  // [i-1] holds d_i
  std::vector<std::vector<std::uint32_t>> labels;        // subsets per degree, increasing masks
  std::vector<std::vector<Monomial>> label_monomials;    // x_D per basis element

  bool is_complex() const;  // d o d == 0 exactly
};

FreeComplex taylor_complex(const std::vector<Monomial>& gens, std::size_t cap = kDefaultGeneratorCap);
FreeComplex koszul_complex(const std::vector<Monomial>& gens, std::size_t cap = kDefaultGeneratorCap);

struct BettiTable {
  std::vector<std::size_t> total;  // beta_0 .. beta_pd
  std::size_t pd = 0;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Homology ranks of the Taylor complex of the minimal generators tensored to Q.
BettiTable betti_table(const MonomialIdeal& i, std::size_t cap = kDefaultGeneratorCap);

// Ranks of the reduced Taylor complex, degree by degree.
std::vector<std::size_t> reduced_taylor_ranks(const MonomialIdeal& i);

struct KoszulComparison {
  FreeComplex koszul;
  bool comparison_ok = false;
  std::vector<Monomial> phi;  // lcm(x_i, x_j) / (x_i x_j) for i < j
};

// Throws NotCoprime when two generators share a variable.
KoszulComparison koszul_compare(const std::vector<Monomial>& gens, std::size_t cap = kDefaultGeneratorCap);

// pd(A / rad I); checked against pd(A / I).
std::size_t cd(const MonomialIdeal& i, std::size_t cap = kDefaultGeneratorCap);

}  // namespace semireg
