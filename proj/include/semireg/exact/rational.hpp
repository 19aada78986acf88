#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace semireg {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps mpq_class canonical after arithmetic
using RatVec = std::vector<Rational>;
using IntVec = std::vector<Integer>;
using Point = std::vector<std::int64_t>;

std::string to_string(const Rational& q);
std::string to_string(const Point& p);

// Parses "a" or "a/b" with optional leading sign. Throws ParseError.
Rational parse_rational(const std::string& text, std::size_t offset = 0);

Integer lcm_of_denominators(const RatVec& v);
RatVec to_rational(const Point& p);

// Exact narrowing; throws Error(Overflow) when out of range.
std::int64_t to_int64(const Integer& z);

}  // namespace semireg
