#pragma once

#include <optional>
#include <vector>

#include "semireg/exact/rational.hpp"

namespace semireg {

inline constexpr std::size_t kMaxDualDimension = 4;

struct LinearFunctional {
  RatVec coefficients;

  Rational operator()(const RatVec& x) const;
  Rational operator()(const Point& x) const;
};

// Dual of cone(gens): {L : L(g) >= 0 for all g} = cone(rays) + span(lineality).
// Rays are primitive integer vectors; lineality spans the annihilator of the gens.
struct DualCone {
  std::size_t dim = 0;
  std::vector<Point> rays;
  std::vector<Point> lineality;

  bool contains_dual(const Point& x) const;  // x in cone(gens)
};

// Throws UnsupportedDimension above kMaxDualDimension.
DualCone dual_cone(const std::vector<Point>& gens, std::size_t dim);

// L >= 0 on the generators, L(x) < 0; strict mode also asks L(g) > 0 for every
// nonzero generator.
LinearFunctional separating_functional(const std::vector<Point>& gens, const Point& x, bool strict);

// An integral functional positive on every nonzero generator, or nullopt when
// the cone contains a line.
std::optional<Point> positive_functional(const DualCone& dual, const std::vector<Point>& gens);

std::int64_t evaluate(const Point& functional, const Point& x);

}  // namespace semireg
