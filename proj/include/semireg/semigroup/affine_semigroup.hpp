#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "semireg/exact/cone_dual.hpp"
#include "semireg/exact/smith.hpp"

namespace semireg {

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

struct AffineSemigroup {
  std::size_t ambient_dim = 0;
  std::vector<Point> generators;
  std::int64_t search_bound = 0;

  // Drops zero generators, deduplicates (first occurrence wins) and raises the
  // bound to at least 3x the largest generator coordinate; bound 0 means default.
  static AffineSemigroup make(std::size_t dim, std::vector<Point> gens, std::int64_t bound = 0);
};

struct Verdict {
  bool value = true;
  std::optional<Point> witness;
  bool bounded = false;
  bool applicable = true;
};

// Membership of integer points in the subgroup generated by a set of vectors.
class LatticeTest {
 public:
  LatticeTest(const std::vector<Point>& gens, std::size_t dim);
  bool contains(const Point& v) const;
  // Canonical representative of v modulo the lattice.
  Point reduce(const Point& v) const;
  std::size_t rank() const { return rank_; }

 private:
  std::size_t dim_;
  std::size_t rank_ = 0;
  ZMatrix U_;
  std::vector<Integer> d_;
};

// Exact membership with a memo table. Units (generators in the lineality of
// the cone) are handled through the quotient by the group they generate; the
// remaining generators take a positive weight so the search is finite.
class MembershipOracle {
 public:
  explicit MembershipOracle(const AffineSemigroup& s);
  bool contains(const Point& v) const;
  bool in_cone(const Point& v) const;
  bool in_group(const Point& v) const { return group_.contains(v); }
  bool positive() const { return unit_gens_.empty(); }
  const std::vector<Point>& unit_generators() const { return unit_gens_; }
  const Point& weight() const { return weight_; }

 private:
  bool search(const Point& v) const;

  bool may_contain(const Point& v) const;

  std::size_t dim_;
  std::optional<DualCone> dual_;
  Point weight_;
  std::vector<Point> unit_gens_;
  std::vector<Point> free_gens_;
  LatticeTest units_;
  LatticeTest group_;
  mutable std::unordered_map<Point, bool, PointHash> memo_;
};

Verdict membership(const AffineSemigroup& s, const Point& v);
Verdict is_positive(const AffineSemigroup& s);
Verdict is_normal(const AffineSemigroup& s);
Verdict is_full(const AffineSemigroup& sub, const AffineSemigroup& sup);

// s = B (Z^k + C') with B = embedding (columns: k unit-group basis vectors,
// then a complement basis of the group of s).
struct PositiveSplit {
  std::size_t k = 0;
  ZMatrix embedding;
  AffineSemigroup positive_part;

  // Coordinates of v with respect to the embedding basis, or nullopt when v
  // is outside the group of s.
  std::optional<Point> coordinates(const Point& v) const;
  bool contains(const Point& v) const;
};

PositiveSplit split_positive(const AffineSemigroup& s);

std::vector<AffineSemigroup> filtration(const std::vector<Point>& points, std::size_t depth);

std::size_t group_rank(const AffineSemigroup& s);

// Lattice points of [-r, r]^dim ordered by L1 norm, then lexicographically.
std::vector<Point> box_points(std::size_t dim, std::int64_t radius);

// Box members of s ordered as box_points.
std::vector<Point> members_in_box(const MembershipOracle& oracle, std::size_t dim, std::int64_t radius);

}  // namespace semireg
