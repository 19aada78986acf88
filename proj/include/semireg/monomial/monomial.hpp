#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "semireg/kernels/exponent_kernels.hpp"

namespace semireg {

using kernels::kMaxVars;

struct alignas(64) Monomial {
  std::array<kernels::Exp, kMaxVars> exps{};

  Monomial() = default;
  explicit Monomial(const std::vector<unsigned>& e);

  kernels::Exp operator[](std::size_t i) const { return exps[i]; }
  kernels::Exp& operator[](std::size_t i) { return exps[i]; }
  const kernels::Exp* data() const { return exps.data(); }
  kernels::Exp* data() { return exps.data(); }

  bool is_unit() const;
  unsigned degree() const;
  std::uint32_t support() const;  // bit i set iff exps[i] > 0

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);  // throws Overflow
Monomial quotient(const Monomial& a, const Monomial& b);  // requires b | a
Monomial power(const Monomial& a, unsigned t);             // throws Overflow

// Generic names x1..xn.
std::vector<std::string> default_variables(std::size_t n);

// "x^2*y", "1" for the unit.
std::string to_string(const Monomial& m, const std::vector<std::string>& vars);

struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<Monomial> gens;  // minimal, degree then reverse-lex exponent order

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens.front().is_unit(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

std::string to_string(const MonomialIdeal& i, const std::vector<std::string>& vars);

MonomialIdeal min_gens(std::size_t nvars, std::vector<Monomial> raw);
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& u);
MonomialIdeal radical(const MonomialIdeal& i);
MonomialIdeal frobenius_power(const MonomialIdeal& i, unsigned t);

struct Polarization {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
  std::vector<std::size_t> back_map;  // new variable -> original variable
};

// Variables named <var>_<k>; variables absent from every generator are dropped.
Polarization polarize(const MonomialIdeal& i, const std::vector<std::string>& vars);

// Minimum size of a variable set meeting every generator's support.
std::size_t height(const MonomialIdeal& i);

}  // namespace semireg
