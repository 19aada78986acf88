#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semireg/exact/matrix.hpp"

namespace semireg {

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const QMatrix& m);
std::size_t rank(const ZMatrix& m);
std::size_t rank_of(const std::vector<RatVec>& rows);

// Rank over Q of a small dense row-major integer matrix. Stays in 64-bit
// arithmetic and redoes the elimination in GMP on overflow.
std::size_t rank_small(const std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols);

Rational determinant(const QMatrix& m);

// Some solution of A x = b (free variables set to zero), or nullopt.
std::optional<RatVec> solve(const QMatrix& a, const RatVec& b);

// Basis of {x : A x = 0}.
std::vector<RatVec> nullspace(const QMatrix& a);

// Inverse of a square nonsingular matrix; throws DependentGenerators when singular.
QMatrix inverse(const QMatrix& m);

// Unique c with sum c_i gamma_i = v when it exists and every c_i >= 0.
std::optional<RatVec> cone_coordinates(const std::vector<RatVec>& gamma, const RatVec& v);

// Coordinates of v in an independent family (any signs), or nullopt if v is
// outside the span.
std::optional<RatVec> span_coordinates(const std::vector<RatVec>& family, const RatVec& v);

// Scales a nonzero rational vector to the primitive integer vector with the same direction.
Point primitive(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);

}  // namespace semireg
